#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace isodouble {

using BigInt = boost::multiprecision::cpp_int;

/// beta(m) = 1 for m = 0 (mod 8), 2 for m = 4 (mod 8).
/// Throws InapplicableError unless m is a positive multiple of 4.
int beta(int m);

/// Coefficient q beta(m) (m/2 - 1)! of the top Pontrjagin class p_{m/4} of
/// the FKM normal bundle, in units of the generator. The class of the
/// associated sphere bundle carries the opposite sign.
BigInt pontrjagin_top(int m, long long q);

/// Sign of p_{m/4}(zeta) relative to pontrjagin_top.
inline constexpr int kZetaSign = -1;

bool is_prime(long long p);

/// (p - 1)! = -1 (mod p). Throws DomainError for p < 2.
bool wilson_check(long long p);

/// 2^{-1} (p - 1)! mod p for an odd prime p, which equals (p - 1) / 2.
/// Throws DomainError unless p is an odd prime.
long long half_factorial_residue(long long p);

/// Residue of q_1(zeta) modulo p = m/2 + 1, reported as the unordered class
/// {res, -res} because the generator is fixed only up to sign.
struct WuResidue {
  long long p = 0;
  long long residue = 0;  ///< representative in [0, p)
  std::pair<long long, long long> pair{0, 0};  ///< (res, -res mod p)

  bool contains(long long x) const;
};

/// Closed form: (-1)^{m/4+1} q for m = 4 (mod 8), (-1)^{m/4} q (p-1)/2 for
/// m = 0 (mod 8). Throws InapplicableError("p = m/2+1 not prime") or for m
/// not divisible by 4.
WuResidue wu_residue(int m, long long q);

/// The same residue from pontrjagin_top: the Newton identity gives
/// q_1 = (-1)^{r+1} r p_r(zeta) with r = m/4, reduced mod p.
WuResidue wu_residue_from_pontrjagin(int m, long long q);

enum class Verdict { distinct, inconclusive, inapplicable };
std::string to_string(Verdict v);

struct Distinction {
  Verdict verdict = Verdict::inapplicable;
  int m = 0;
  int l = 0;
  long long q1 = 0;
  long long q2 = 0;
  std::optional<long long> p;
  std::optional<WuResidue> residue1;
  std::optional<WuResidue> residue2;
  std::string reason;
  std::vector<std::string> warnings;
};

/// Homotopy distinctness of the doubles for two FKM indices q1, q2 on the
/// same (m, l): distinct iff p = m/2 + 1 is an odd prime and
/// q1 != +-q2 (mod p).
Distinction distinguish(int m, int l, long long q1, long long q2);

struct FKMTopologyRecord {
  int m = 0;
  int l = 0;
  long long q = 0;
  int beta = 0;
  BigInt pontrjagin_top;
  std::optional<long long> wu_prime;
  std::optional<WuResidue> wu_residue;
  std::string sign_note;
};

FKMTopologyRecord fkm_topology_record(int m, int l, long long q);

}  // namespace isodouble
