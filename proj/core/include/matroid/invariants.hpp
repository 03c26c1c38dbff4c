#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

using BigInt = boost::multiprecision::cpp_int;

// Corank-nullity expansion with exact coefficients; coeffs[i][j] multiplies
// x^i y^j.
struct TuttePolynomial {
  std::vector<std::vector<BigInt>> coeffs;

  BigInt coefficient(int i, int j) const;
  BigInt evaluate(long long x, long long y) const;
  BigInt basis_count() const { return evaluate(1, 1); }
  bool operator==(const TuttePolynomial& o) const;
};

TuttePolynomial tutte(const CyclicFlatMatroid& m, int budget = kEnumerationBudget);

enum class GMethod { FlagCount, PermutationScan };

// Both methods are keyed by compositions (d_0, d_1, ..., d_r) of n.
// FlagCount counts flags of flats with those difference sizes;
// PermutationScan counts permutations whose rank-increase vector is
// 0^{d_0} 1 0^{d_1 - 1} ... 1 0^{d_r - 1}.  The tables carry equivalent
// data: two matroids agree on one iff they agree on the other.
struct GInvariant {
  GMethod method = GMethod::FlagCount;
  std::map<std::vector<int>, BigInt> table;
};

GInvariant g_invariant(const CyclicFlatMatroid& m, GMethod method);

// Canonical, label-free encoding of (lattice of cyclic flats, size, rank, n).
struct Configuration {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  static Configuration from_hex(const std::string& hex);
  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

Configuration configuration(const CyclicFlatMatroid& m);
bool same_configuration(const CyclicFlatMatroid& a, const CyclicFlatMatroid& b);

// The configuration of the dual, computed from the encoding alone: order
// dual of the lattice, node (s, rho) -> (n - s, n - s - r(M) + rho).
Configuration configuration_dual(const Configuration& c);

// A bijection of ground sets carrying Z(M) onto Z(N) with ranks preserved,
// or nullopt.  perm[e-1] is the image of e.
std::optional<std::vector<int>> find_isomorphism(const CyclicFlatMatroid& m,
                                                 const CyclicFlatMatroid& n);

enum class UniquenessCertificate { IntersectionClosedModular, UnionClosedModular, NoCertificate };

std::string to_string(UniquenessCertificate c);

// Sound certificates for configuration uniqueness: every pair of cyclic
// flats modular and the family closed under intersection (resp. union).
// NoCertificate implies nothing.
UniquenessCertificate uniqueness_certificate(const CyclicFlatMatroid& m);

}  // namespace matroid
