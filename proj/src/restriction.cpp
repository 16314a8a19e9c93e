#include "springer/restriction.hpp"

#include "springer/correspondence.hpp"

#include <algorithm>

namespace springer {

std::string to_string(ProcedureKind kind)
{
    switch (kind) {
    case ProcedureKind::A_prime: return "A'";
    case ProcedureKind::A_doubleprime: return "A''";
    case ProcedureKind::B: return "B";
    }
    return "?";
}

namespace {

Partition replace_rows(const Partition& lambda, int from, int to, int count)
{
    std::vector<int> parts = lambda.parts();
    for (int k = 0; k < count; ++k) {
        auto it = std::find(parts.begin(), parts.end(), from);
        *it = to;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int next_value(const BlockForm& form, std::size_t b)
{
    return b + 1 < form.size() ? form[b + 1].value : 0;
}

// Sign of the lambda' block with the given value; +1 for value 0.
int sign_of_value(const BlockForm& form, const SignVector& tau, int value)
{
    if (value == 0)
        return 1;
    for (std::size_t b = 0; b < form.size(); ++b)
        if (form[b].value == value)
            return tau[b];
    throw std::logic_error("sign_of_value: no block with value " + std::to_string(value));
}

}  // namespace

std::vector<Procedure> procedures(const Partition& lambda, const Partition& lambda_prime)
{
    if (lambda_prime.size() != lambda.size() - 2)
        throw std::invalid_argument("procedures: |lambda'| must equal |lambda| - 2");
    const BlockForm form = blocks(lambda);
    std::vector<Procedure> out;
    for (std::size_t b = 0; b < form.size(); ++b) {
        const int a = form[b].value;
        const int next = next_value(form, b);
        const int index = static_cast<int>(b) + 1;
        if (a >= 2 && replace_rows(lambda, a, a - 2, 1) == lambda_prime) {
            if (next <= a - 2)
                out.push_back({ProcedureKind::A_prime, index});
            else
                out.push_back({ProcedureKind::A_doubleprime, index});
        }
        if (form[b].multiplicity >= 2 && replace_rows(lambda, a, a - 1, 2) == lambda_prime)
            out.push_back({ProcedureKind::B, index});
    }
    return out;
}

YDimension y_dimension(const Partition& lambda, const Partition& lambda_prime,
                       const Procedure& proc)
{
    const auto all = procedures(lambda, lambda_prime);
    if (std::find(all.begin(), all.end(), proc) == all.end())
        throw std::invalid_argument("y_dimension: procedure does not relate the partitions");
    const BlockForm form = blocks(lambda);
    std::int64_t m = 0;
    for (int b = 0; b < proc.block; ++b)
        m += form[static_cast<std::size_t>(b)].multiplicity;

    YDimension y;
    y.dim_Y = proc.kind == ProcedureKind::B ? m - 2 : m - 1;
    // s = (n(lambda) - (n(lambda') + 1))/2 + 1/2
    y.s = HalfInteger::from_twice(n_invariant(lambda) - n_invariant(lambda_prime));
    y.full = proc.kind == ProcedureKind::A_prime;
    return y;
}

bool d_member(const SignVector& tau, const SignVector& tau_prime, int block,
              const Partition& lambda, const Partition& lambda_prime)
{
    const auto all = procedures(lambda, lambda_prime);
    const Procedure wanted{ProcedureKind::A_prime, block};
    if (std::find(all.begin(), all.end(), wanted) == all.end())
        throw std::invalid_argument("d_member: no A' move at this block");
    const BlockForm form = blocks(lambda);
    const BlockForm form_prime = blocks(lambda_prime);
    if (tau.size() != form.size() || tau_prime.size() != form_prime.size())
        throw std::invalid_argument("d_member: sign vector length mismatch");

    const std::size_t i = static_cast<std::size_t>(block - 1);
    for (std::size_t j = 0; j < form.size(); ++j) {
        if (j == i)
            continue;
        if (tau[j] != sign_of_value(form_prime, tau_prime, form[j].value))
            return false;
    }
    return tau[i] == sign_of_value(form_prime, tau_prime, form[i].value - 2);
}

int epsilon_multiplicity(const PairLabel& p, const PairLabel& p_prime)
{
    const Partition& lambda = p.orbit.lambda;
    const Partition& lambda_prime = p_prime.orbit.lambda;
    if (lambda_prime.size() != lambda.size() - 2)
        return 0;
    if (p.orbit.split != Split::none && p_prime.orbit.split != Split::none &&
        p.orbit.split != p_prime.orbit.split)
        return 0;
    for (const auto& proc : procedures(lambda, lambda_prime)) {
        if (proc.kind != ProcedureKind::A_prime)
            continue;
        if (d_member(p.tau, p_prime.tau, proc.block, lambda, lambda_prime))
            return 1;
    }
    return 0;
}

BranchingCheck branching_consistency(const CuspidalDatum& c, const Partition& mu,
                                     const Partition& mu_prime, int N)
{
    const int a = series_rank(c, N);
    if (a < 1 || mu.size() != a || mu_prime.size() != a - 1)
        throw std::invalid_argument("branching_consistency: need |mu| = a >= 1, |mu'| = a - 1");
    BranchingCheck check;
    const auto removals = box_removals(mu);
    check.box_removal = std::find(removals.begin(), removals.end(), mu_prime) != removals.end();
    check.epsilon = epsilon_multiplicity(gamma(c, mu), gamma(c, mu_prime));
    return check;
}

}  // namespace springer
