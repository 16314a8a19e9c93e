#include "springer/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace springer {

namespace {

std::vector<int> normalized(std::vector<int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return parts;
}

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

// prime -> exponent
void add_factorization(std::map<int, int>& acc, int value, int sign)
{
    for (int p = 2; p * p <= value; ++p) {
        while (value % p == 0) {
            acc[p] += sign;
            value /= p;
        }
    }
    if (value > 1)
        acc[value] += sign;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{}

Partition::Partition(std::vector<int> parts)
    : parts_(normalized(std::move(parts)))
{
    for (int p : parts_)
        size_ += p;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

std::int64_t n_invariant(const Partition& lambda)
{
    std::int64_t n = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        n += static_cast<std::int64_t>(i) * parts[i];
    return n;
}

std::vector<Partition> enumerate_partitions(int m)
{
    if (m < 0)
        throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(m, m, prefix, out);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda)
{
    if (mu.size() != lambda.size())
        throw std::invalid_argument("dominance_leq: partitions of different sizes");
    const std::size_t len = std::max(mu.length(), lambda.length());
    int sum_mu = 0;
    int sum_lambda = 0;
    for (std::size_t k = 0; k < len; ++k) {
        sum_mu += mu.part(k);
        sum_lambda += lambda.part(k);
        if (sum_mu > sum_lambda)
            return false;
    }
    return true;
}

BlockForm blocks(const Partition& lambda)
{
    BlockForm form;
    for (int p : lambda.parts()) {
        if (!form.empty() && form.back().value == p)
            ++form.back().multiplicity;
        else
            form.push_back({p, 1});
    }
    return form;
}

Partition from_blocks(const BlockForm& form)
{
    std::vector<int> parts;
    for (std::size_t i = 0; i < form.size(); ++i) {
        const auto& b = form[i];
        if (b.value <= 0 || b.multiplicity <= 0)
            throw std::invalid_argument("from_blocks: non-positive value or multiplicity");
        if (i > 0 && form[i - 1].value <= b.value)
            throw std::invalid_argument("from_blocks: values must be strictly decreasing");
        parts.insert(parts.end(), static_cast<std::size_t>(b.multiplicity), b.value);
    }
    return Partition(std::move(parts));
}

std::size_t block_of_row(const BlockForm& form, std::size_t row)
{
    std::size_t end = 0;
    for (std::size_t b = 0; b < form.size(); ++b) {
        end += static_cast<std::size_t>(form[b].multiplicity);
        if (row < end)
            return b;
    }
    return form.size();
}

bool is_even(const Partition& lambda)
{
    return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                       [](int p) { return p % 2 == 0; });
}

Partition add_twice(const Partition& nu, const Partition& mu)
{
    const std::size_t len = std::max(nu.length(), mu.length());
    std::vector<int> parts(len);
    for (std::size_t i = 0; i < len; ++i)
        parts[i] = nu.part(i) + 2 * mu.part(i);
    // Partition's constructor rejects a non-monotone sequence.
    return Partition(std::move(parts));
}

std::vector<Partition> box_removals(const Partition& mu)
{
    if (mu.empty())
        throw std::invalid_argument("box_removals: empty partition");
    std::vector<Partition> out;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // A corner sits at the end of the last row of each block.
        if (i + 1 < parts.size() && parts[i + 1] == parts[i])
            continue;
        std::vector<int> next = parts;
        --next[i];
        out.emplace_back(std::move(next));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts;
    if (lambda.empty())
        return Partition();
    for (int k = 1; k <= lambda.part(0); ++k) {
        int count = 0;
        for (int p : lambda.parts())
            count += (p >= k) ? 1 : 0;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

std::uint64_t hook_dimension(const Partition& mu)
{
    const Partition conj = conjugate(mu);
    std::map<int, int> exponents;
    for (int k = 2; k <= mu.size(); ++k)
        add_factorization(exponents, k, +1);
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            const int hook = (parts[i] - j - 1) + (conj.part(static_cast<std::size_t>(j)) -
                                                   static_cast<int>(i) - 1) + 1;
            add_factorization(exponents, hook, -1);
        }
    }
    std::uint64_t result = 1;
    for (const auto& [prime, exponent] : exponents) {
        if (exponent < 0)
            throw std::logic_error("hook_dimension: hook product does not divide factorial");
        for (int e = 0; e < exponent; ++e) {
            if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(prime), &result))
                throw std::overflow_error("hook_dimension: result exceeds 64 bits");
        }
    }
    return result;
}

std::string format_partition(const Partition& lambda)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i > 0)
            out << ',';
        out << lambda.parts()[i];
    }
    out << ']';
    return out.str();
}

Partition parse_partition(std::string_view text, std::size_t& pos)
{
    if (pos >= text.size() || text[pos] != '[')
        throw ParseError("expected '['", pos);
    ++pos;
    std::vector<int> parts;
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return Partition();
    }
    while (true) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a positive integer", pos);
        const std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000)
                throw ParseError("part too large", start);
            ++pos;
        }
        if (value == 0)
            throw ParseError("parts must be positive", start);
        if (!parts.empty() && parts.back() < value)
            throw ParseError("parts must be weakly decreasing", start);
        parts.push_back(static_cast<int>(value));
        if (pos >= text.size())
            throw ParseError("unterminated partition", pos);
        if (text[pos] == ']') {
            ++pos;
            break;
        }
        if (text[pos] != ',')
            throw ParseError("expected ',' or ']'", pos);
        ++pos;
    }
    return Partition(std::move(parts));
}

Partition parse_partition(std::string_view text)
{
    std::size_t pos = 0;
    Partition result = parse_partition(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters after partition", pos);
    return result;
}

}  // namespace springer
