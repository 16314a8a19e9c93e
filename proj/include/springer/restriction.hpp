#pragma once

#include "springer/cuspidal.hpp"
#include "springer/half_integer.hpp"

#include <string>
#include <vector>

namespace springer {

enum class ProcedureKind { A_prime, A_doubleprime, B };

std::string to_string(ProcedureKind kind);

/// A Young diagram move taking a partition of N to one of N-2.
struct Procedure {
    ProcedureKind kind;
    int block;  // 1-based index into blocks(lambda)

    bool operator==(const Procedure&) const = default;
};

/// All moves turning lambda into lambda_prime. Throws std::invalid_argument
/// if |lambda_prime| != |lambda| - 2.
std::vector<Procedure> procedures(const Partition& lambda, const Partition& lambda_prime);

struct YDimension {
    std::int64_t dim_Y = 0;
    HalfInteger s;
    bool full = false;
};

/// Throws std::invalid_argument unless proc belongs to procedures(lambda, lambda_prime).
YDimension y_dimension(const Partition& lambda, const Partition& lambda_prime,
                       const Procedure& proc);

/// Membership of (tau, tau') in the pairing set for an A' move at `block`
/// (1-based). Throws std::invalid_argument when no A' move at that block
/// relates the two partitions.
bool d_member(const SignVector& tau, const SignVector& tau_prime, int block,
              const Partition& lambda, const Partition& lambda_prime);

/// 0 or 1.
int epsilon_multiplicity(const PairLabel& p, const PairLabel& p_prime);

struct BranchingCheck {
    bool box_removal = false;  // mu' is obtained from mu by removing a box
    int epsilon = 0;           // epsilon_multiplicity of the two gamma images
    bool consistent() const { return box_removal == (epsilon == 1); }
};

/// Compares classical branching with the restriction multiplicity for the
/// series c at ranks N and N-2. Requires |mu| = a >= 1 and |mu'| = a - 1.
BranchingCheck branching_consistency(const CuspidalDatum& c, const Partition& mu,
                                     const Partition& mu_prime, int N);

}  // namespace springer
