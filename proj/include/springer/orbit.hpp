#pragma once

#include "springer/partition.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// Numerical data of H = SO_N inside GL_N.
struct GroupContext {
    int N = 0;
    int n = 0;
    std::int64_t dim_H = 0;
    std::int64_t nu_H = 0;

    static GroupContext make(int N);
};

enum class Split { none, plus, minus };

/// Whether a partition of N carries a split tag.
bool needs_split(const Partition& lambda, int N);

struct OrbitLabel {
    Partition lambda;
    Split split = Split::none;

    bool operator==(const OrbitLabel&) const = default;
};

/// One entry per block of the underlying partition, +1 or -1.
using SignVector = std::vector<int>;

struct PairLabel {
    OrbitLabel orbit;
    SignVector tau;

    bool operator==(const PairLabel&) const = default;
};

/// Canonical ordering used for sets and maps. Orbits compare by partition
/// (descending), then split (+ before -); sign vectors lexicographically
/// with + before -.
bool canonical_less(const OrbitLabel& a, const OrbitLabel& b);
bool canonical_less(const PairLabel& a, const PairLabel& b);

struct PairLess {
    bool operator()(const PairLabel& a, const PairLabel& b) const { return canonical_less(a, b); }
};

std::vector<OrbitLabel> enumerate_orbits(int N);

/// dim_H - n(lambda). Throws std::invalid_argument when |lambda| != N.
std::int64_t orbit_dimension(const GroupContext& ctx, const Partition& lambda);

struct ComponentGroups {
    int h = 0;
    std::uint64_t order_A_Gtheta = 0;
    std::uint64_t order_A_H = 0;
};

/// Throws std::invalid_argument on the empty partition.
ComponentGroups component_groups(const Partition& lambda);

/// Index of the block holding the largest odd part, or -1 if all parts are even.
int largest_odd_block(const BlockForm& form);

bool is_valid_sign_vector(const Partition& lambda, const SignVector& tau);

/// All valid sign vectors in canonical order. The empty partition yields the
/// single empty vector.
std::vector<SignVector> valid_sign_vectors(const Partition& lambda);

std::vector<PairLabel> enumerate_pairs(int N);

/// Sign of 0-based row `row`, with the +1 convention past the last part.
int row_sign(const Partition& lambda, const SignVector& tau, std::size_t row);

/// Checks the split and sign invariants for a pair over N = |lambda|.
/// Throws std::invalid_argument describing the first violation.
void validate(const PairLabel& p);

std::string format_signs(const SignVector& tau);
std::string format_orbit(const OrbitLabel& orbit);
std::string format_label(const PairLabel& p);

/// Parsers for the label grammar. Syntax errors raise ParseError, semantic
/// violations raise std::invalid_argument.
SignVector parse_signs(std::string_view text, std::size_t& pos);
OrbitLabel parse_orbit(std::string_view text, std::size_t& pos);
OrbitLabel parse_orbit(std::string_view text);
PairLabel parse_label(std::string_view text);

}  // namespace springer
