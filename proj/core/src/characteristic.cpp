#include "isodouble/characteristic.hpp"

#include <cstdlib>
#include <string>

#include "isodouble/clifford.hpp"
#include "isodouble/errors.hpp"

namespace isodouble {
namespace {

void require_multiple_of_4(int m, const char* what) {
  if (m < 4 || m % 4 != 0)
    throw InapplicableError(std::string(what) + ": m = " + std::to_string(m) +
                            " is not a positive multiple of 4");
}

long long mod(long long x, long long p) {
  const long long r = x % p;
  return r < 0 ? r + p : r;
}

long long mod(const BigInt& x, long long p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<long long>();
}

long long mulmod(long long a, long long b, long long p) {
  if (p < (1LL << 31)) return a * b % p;
  return static_cast<long long>(BigInt(a) * b % p);
}

WuResidue make_residue(long long p, long long res) {
  WuResidue w;
  w.p = p;
  w.residue = mod(res, p);
  w.pair = {w.residue, mod(-w.residue, p)};
  return w;
}

long long wu_prime(int m) {
  require_multiple_of_4(m, "wu_residue");
  const long long p = m / 2 + 1;
  if (!is_prime(p)) throw InapplicableError("p = m/2+1 not prime (p = " + std::to_string(p) + ")");
  return p;
}

}  // namespace

int beta(int m) {
  require_multiple_of_4(m, "beta");
  return m % 8 == 0 ? 1 : 2;
}

BigInt pontrjagin_top(int m, long long q) {
  BigInt f = 1;
  for (int i = 2; i <= m / 2 - 1; ++i) f *= i;
  return BigInt(q) * beta(m) * f;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

bool wilson_check(long long p) {
  if (p < 2) throw DomainError("wilson_check: p must be >= 2");
  long long f = 1 % p;
  for (long long i = 2; i < p && f != 0; ++i) f = mulmod(f, i, p);
  return f == p - 1;
}

long long half_factorial_residue(long long p) {
  if (p < 3 || !is_prime(p)) throw DomainError("half_factorial_residue: p must be an odd prime");
  long long f = 1;
  for (long long i = 2; i < p; ++i) f = mulmod(f, i, p);
  return mulmod((p + 1) / 2, f, p);
}

bool WuResidue::contains(long long x) const {
  const long long r = mod(x, p);
  return r == pair.first || r == pair.second;
}

WuResidue wu_residue(int m, long long q) {
  const long long p = wu_prime(m);
  const long long qm = mod(q, p);
  const int sign = (m / 4) % 2 == 0 ? 1 : -1;  // (-1)^{m/4}
  if (m % 8 == 4) return make_residue(p, -sign * qm);
  return make_residue(p, mulmod(mod(sign * qm, p), (p - 1) / 2, p));
}

WuResidue wu_residue_from_pontrjagin(int m, long long q) {
  const long long p = wu_prime(m);
  const long long r = m / 4;
  const BigInt pz = kZetaSign * pontrjagin_top(m, q);
  const BigInt q1 = (r % 2 == 1 ? 1 : -1) * r * pz;
  return make_residue(p, mod(q1, p));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::distinct: return "distinct";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

Distinction distinguish(int m, int l, long long q1, long long q2) {
  Distinction d;
  d.m = m;
  d.l = l;
  d.q1 = q1;
  d.q2 = q2;
  if (m < 4 || m % 4 != 0) {
    d.reason = "m = " + std::to_string(m) + " is not a positive multiple of 4";
    return d;
  }

  const long long delta = delta_dim(m);
  if (l <= 0 || l % delta != 0) {
    d.warnings.push_back("l = " + std::to_string(l) + " is not a positive multiple of delta(m) = " +
                         std::to_string(delta));
  } else {
    const long long k = l / delta;
    for (long long q : {q1, q2}) {
      if (mod(q - k, 2) != 0)
        d.warnings.push_back("q = " + std::to_string(q) + " violates q = l/delta(m) = " +
                             std::to_string(k) + " (mod 2)");
      if (std::llabs(q) > k)
        d.warnings.push_back("|q| = " + std::to_string(std::llabs(q)) + " exceeds l/delta(m) = " +
                             std::to_string(k));
    }
  }

  const long long p = m / 2 + 1;
  d.p = p;
  if (!is_prime(p)) {
    d.reason = "p = m/2+1 not prime (p = " + std::to_string(p) + ")";
    return d;
  }
  d.residue1 = wu_residue(m, q1);
  d.residue2 = wu_residue(m, q2);
  if (d.residue1->contains(d.residue2->residue)) {
    d.verdict = Verdict::inconclusive;
    d.reason = "q1 = +-q2 (mod " + std::to_string(p) + ")";
  } else {
    d.verdict = Verdict::distinct;
    d.reason = "q1 != +-q2 (mod " + std::to_string(p) + ")";
  }
  return d;
}

FKMTopologyRecord fkm_topology_record(int m, int l, long long q) {
  FKMTopologyRecord r;
  r.m = m;
  r.l = l;
  r.q = q;
  r.beta = beta(m);
  r.pontrjagin_top = pontrjagin_top(m, q);
  if (is_prime(m / 2 + 1)) {
    r.wu_prime = m / 2 + 1;
    r.wu_residue = wu_residue(m, q);
  }
  r.sign_note = "p_{m/4}(zeta) = -pontrjagin_top; the residue is defined up to sign";
  return r;
}

}  // namespace isodouble
