#pragma once

// Dirichlet characters in discrete-log form, weight-characters of Z_p^x,
// and the self-dual classical-point machinery (square-root twists tau).
//
// A character mod M is stored per prime-power factor q | M as an exponent a
// with respect to the smallest primitive root g of (Z/q)^x, so that
// chi(g) = e^{2 pi i a / phi(q)}. All values are roots of unity kept in
// exponent form; equality is reduced-fraction equality.

#include "errors.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace ggp {

/// e^{2 pi i e / n}, stored with the fraction e/n reduced.
struct RootOfUnity {
    long n = 1;  // order of the ambient group
    long e = 0;  // 0 <= e < n, gcd(e, n) = 1 after reduction (or e = 0)

    RootOfUnity() = default;
    RootOfUnity(long order, long exp) {
        if (order <= 0) throw std::invalid_argument("RootOfUnity: order <= 0");
        exp %= order;
        if (exp < 0) exp += order;
        long g = std::gcd(exp, order);
        if (exp == 0) {
            n = 1;
            e = 0;
        } else {
            n = order / g;
            e = exp / g;
        }
    }

    bool is_one() const { return e == 0; }
    bool is_minus_one() const { return n == 2 && e == 1; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        long l = std::lcm(a.n, b.n);
        return RootOfUnity(l, a.e * (l / a.n) + b.e * (l / b.n));
    }
    RootOfUnity inverse() const { return RootOfUnity(n, n - e); }
    RootOfUnity pow(long k) const {
        long ex = static_cast<long>((static_cast<long long>(e) * (k % n)) % n);
        return RootOfUnity(n, ex);
    }
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

    /// +1 / -1 for real roots; throws otherwise.
    int as_sign() const {
        if (is_one()) return 1;
        if (is_minus_one()) return -1;
        throw arithmetic_error("root of unity is not real");
    }

    std::string str() const {
        if (is_one()) return "1";
        if (is_minus_one()) return "-1";
        return "zeta(" + std::to_string(n) + ")^" + std::to_string(e);
    }
};

/// chi(a): either zero (gcd(a, M) > 1) or a root of unity.
struct CharValue {
    bool zero = false;
    RootOfUnity value;

    static CharValue make_zero() { return CharValue{true, {}}; }
    static CharValue of(RootOfUnity w) { return CharValue{false, w}; }
    friend bool operator==(const CharValue&, const CharValue&) = default;
    std::string str() const { return zero ? "0" : value.str(); }
};

namespace detail {

inline long phi_prime_power(const Int& prime, int k) {
    Int q = ipow(prime, k);
    Int phi = q - q / prime;
    return static_cast<long>(phi);
}

/// Smallest primitive root of (Z/q)^x for q an odd prime power or q = 4.
inline long smallest_primitive_root(const Int& q, const Int& prime, int k) {
    if (prime == 2) {
        if (k == 1) return 1;
        if (k == 2) return 3;
        throw unsupported("modulus divisible by 8 is not supported");
    }
    long phi = phi_prime_power(prime, k);
    std::vector<long> prime_divs;
    long n = phi;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_divs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_divs.push_back(n);
    for (Int g = 2; g < q; ++g) {
        if (gcd(g, q) != 1) continue;
        bool primitive = true;
        for (long d : prime_divs)
            if (powmod(g, phi / d, q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return static_cast<long>(g);
    }
    throw std::logic_error("no primitive root found");
}

inline long dlog(const Int& x, long g, const Int& q, long phi) {
    Int cur = 1;
    for (long i = 0; i < phi; ++i) {
        if (cur == mod_reduce(x, q)) return i;
        cur = cur * g % q;
    }
    throw std::invalid_argument("dlog: element not a unit");
}

}  // namespace detail

class DirichletCharacter {
public:
    struct Factor {
        Int prime;
        int prime_exp = 1;  // q = prime^prime_exp
        Int q;
        long gen = 1;    // smallest primitive root of (Z/q)^x
        long order = 1;  // phi(q)
        long a = 0;      // chi(gen) = zeta_order^a
    };

    DirichletCharacter() : modulus_(1) {}  // trivial character mod 1

    /// Trivial character of the given modulus.
    static DirichletCharacter trivial(const Int& modulus) {
        DirichletCharacter chi;
        chi.init_factors(modulus);
        return chi;
    }

    /// Character from per-prime-power exponents {prime -> a}.
    static DirichletCharacter from_exponents(const Int& modulus,
                                             const std::map<Int, long>& exps) {
        DirichletCharacter chi;
        chi.init_factors(modulus);
        for (auto& f : chi.factors_) {
            auto it = exps.find(f.prime);
            if (it != exps.end()) {
                long a = it->second % f.order;
                if (a < 0) a += f.order;
                f.a = a;
            }
        }
        return chi;
    }

    const Int& modulus() const { return modulus_; }
    const std::vector<Factor>& factors() const { return factors_; }

    bool is_trivial() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const Factor& f) { return f.a == 0; });
    }

    /// Order of chi in the dual group.
    long order() const {
        long o = 1;
        for (auto& f : factors_)
            o = std::lcm(o, f.a == 0 ? 1L : f.order / std::gcd(f.a, f.order));
        return o;
    }

    CharValue evaluate(const Int& x) const {
        if (gcd(mod_reduce(x, modulus_), modulus_) != 1 && modulus_ != 1)
            return CharValue::make_zero();
        RootOfUnity v;
        for (auto& f : factors_) {
            if (f.a == 0) continue;
            long d = detail::dlog(x, f.gen, f.q, f.order);
            v = v * RootOfUnity(f.order, f.a * d % f.order);
        }
        return CharValue::of(v);
    }

    /// chi(-1): +1 for even characters, -1 for odd.
    int parity() const {
        if (modulus_ == 1) return 1;
        return evaluate(modulus_ - 1).value.as_sign();
    }

    /// Smallest modulus through which chi factors.
    Int conductor() const {
        Int c = 1;
        for (auto& f : factors_) {
            if (f.a == 0) continue;
            long o = f.order / std::gcd(f.a, f.order);
            for (int m = 1; m <= f.prime_exp; ++m) {
                if (detail::phi_prime_power(f.prime, m) % o == 0) {
                    c *= ipow(f.prime, m);
                    break;
                }
            }
        }
        return c;
    }

    /// The same character of Z-hat^x, presented at its conductor.
    DirichletCharacter primitive() const { return induce(conductor()); }

    /// View chi modulo a multiple of its conductor.
    DirichletCharacter induce(const Int& new_modulus) const {
        if (new_modulus % conductor() != 0)
            throw validation_error("induce: conductor does not divide target modulus");
        DirichletCharacter out;
        out.init_factors(new_modulus);
        for (auto& nf : out.factors_) {
            for (auto& f : factors_) {
                if (f.prime != nf.prime || f.a == 0) continue;
                // nf.gen is a unit mod f.q since f.q | nf.q; express chi(nf.gen)
                // as a root of unity of order nf.order
                long d = detail::dlog(Int(nf.gen), f.gen, f.q, f.order);
                RootOfUnity w(f.order, f.a * d % f.order);
                if (nf.order % w.n != 0)
                    throw std::logic_error("induce: order mismatch");
                nf.a = (nf.order / w.n) * w.e % nf.order;
            }
        }
        return out;
    }

    friend DirichletCharacter operator*(const DirichletCharacter& x,
                                        const DirichletCharacter& y) {
        Int m = lcm(x.conductor(), y.conductor());
        DirichletCharacter a = x.induce(m), b = y.induce(m);
        for (size_t i = 0; i < a.factors_.size(); ++i)
            a.factors_[i].a = (a.factors_[i].a + b.factors_[i].a) % a.factors_[i].order;
        return a;
    }

    DirichletCharacter inverse() const {
        DirichletCharacter out = *this;
        for (auto& f : out.factors_)
            if (f.a != 0) f.a = f.order - f.a;
        return out;
    }

    friend DirichletCharacter operator/(const DirichletCharacter& x,
                                        const DirichletCharacter& y) {
        return x * y.inverse();
    }

    /// Equality as characters of Z-hat^x (i.e. after conductor reduction).
    friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) {
        DirichletCharacter a = x.primitive(), b = y.primitive();
        if (a.modulus_ != b.modulus_) return false;
        for (size_t i = 0; i < a.factors_.size(); ++i)
            if (a.factors_[i].a != b.factors_[i].a) return false;
        return true;
    }

private:
    void init_factors(Int modulus) {
        if (modulus < 1) throw validation_error("character modulus must be >= 1");
        if (modulus % 8 == 0) throw unsupported("modulus divisible by 8 is not supported");
        modulus_ = modulus;
        factors_.clear();
        Int m = modulus;
        for (Int pr = 2; pr * pr <= m; ++pr) {
            if (m % pr != 0) continue;
            int k = 0;
            while (m % pr == 0) {
                m /= pr;
                ++k;
            }
            push_factor(pr, k);
        }
        if (m > 1) push_factor(m, 1);
        std::sort(factors_.begin(), factors_.end(),
                  [](const Factor& a, const Factor& b) { return a.prime < b.prime; });
    }

    void push_factor(const Int& prime, int k) {
        Factor f;
        f.prime = prime;
        f.prime_exp = k;
        f.q = ipow(prime, k);
        f.order = (prime == 2 && k == 1) ? 1 : detail::phi_prime_power(prime, k);
        f.gen = detail::smallest_primitive_root(f.q, prime, k);
        factors_.push_back(f);
    }

    Int modulus_;
    std::vector<Factor> factors_;
};

/// All psi with psi^2 = chi among characters of modulus dividing p * modulus(chi).
/// chi must have p-power modulus (modulus 1 allowed); p odd. Empty iff chi is odd.
inline std::vector<DirichletCharacter> square_roots(const DirichletCharacter& chi,
                                                    const Int& p) {
    if (p == 2) throw validation_error("p = 2 is not supported");
    Int m = chi.conductor();
    int k = (m == 1) ? 0 : vp(m, p);
    if (ipow(p, k) != m)
        throw validation_error("square_roots: modulus is not a power of p");
    Int target = ipow(p, k + 1);
    DirichletCharacter ind = chi.induce(target);
    long order = ind.factors()[0].order;
    long c = ind.factors()[0].a;
    if (c % 2 != 0) return {};  // chi(-1) = (-1)^c = -1: no square root
    std::vector<DirichletCharacter> roots;
    for (long x : {c / 2, c / 2 + order / 2}) {
        auto psi = DirichletCharacter::from_exponents(target, {{p, x % order}});
        roots.push_back(psi.primitive());
    }
    std::sort(roots.begin(), roots.end(),
              [](const DirichletCharacter& a, const DirichletCharacter& b) {
                  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
                  long ea = a.factors().empty() ? 0 : a.factors()[0].a;
                  long eb = b.factors().empty() ? 0 : b.factors()[0].a;
                  return ea < eb;
              });
    return roots;
}

/// x |-> x^k chi(x) on Z_p^x, with chi of p-power modulus.
struct WeightCharacter {
    long exponent = 0;
    DirichletCharacter finite_part;  // p-power modulus
    Int p;

    WeightCharacter(long k, DirichletCharacter chi, Int prime)
        : exponent(k), finite_part(std::move(chi)), p(std::move(prime)) {
        if (p == 2) throw validation_error("p = 2 is not supported");
        Int m = finite_part.modulus();
        if (m != 1 && ipow(p, vp(m, p)) != m)
            throw validation_error("WeightCharacter: finite part must have p-power modulus");
    }

    /// Value at a unit u given mod p^r: the pair (u^k mod p^r, chi(u)).
    struct Value {
        Int unit_power;
        RootOfUnity finite_value;
    };
    Value evaluate(const Int& u, int r) const {
        Int pr = ipow(p, r);
        if (gcd(mod_reduce(u, pr), pr) != 1)
            throw validation_error("WeightCharacter: not a unit");
        Int base = exponent >= 0 ? mod_reduce(u, pr) : invmod(u, pr);
        Int up = powmod(base, Int(exponent >= 0 ? exponent : -exponent), pr);
        CharValue cv = finite_part.evaluate(u);
        if (cv.zero) throw validation_error("WeightCharacter: not a unit for chi");
        return Value{up, cv.value};
    }
};

/// A specialisation of the tensor of two weight families, together with the
/// chosen component cbar and the square-root twist tau.
struct ClassicalPoint {
    WeightCharacter weight1;  // c1 + chi1
    WeightCharacter weight2;  // c2 + chi2
    long cbar = 0;            // residue class mod p-1
    DirichletCharacter tau;   // tau^2 = chi1 chi2
    long half_weight = 0;     // floor((c1+c2)/2)
    Int p;
};

/// Validates the parity constraints, computes the square roots of chi1*chi2
/// and selects one by index. cbar must satisfy 2*cbar + eps = c1 + c2 mod p-1,
/// where eps is the parity of c1 + c2.
inline ClassicalPoint make_classical_point(const WeightCharacter& w1,
                                           const WeightCharacter& w2, long cbar,
                                           size_t tau_index = 0) {
    if (w1.p != w2.p) throw validation_error("classical point: mismatched primes");
    const Int& p = w1.p;
    if (w1.finite_part.parity() * w2.finite_part.parity() != 1)
        throw parity_violation("chi1(-1) chi2(-1) != 1");
    long s = w1.exponent + w2.exponent;
    long eps = ((s % 2) + 2) % 2;
    long pm1 = static_cast<long>(p - 1);
    long lhs = ((2 * cbar + eps - s) % pm1 + pm1) % pm1;
    if (lhs != 0)
        throw parity_violation("cbar residue class incompatible with c1 + c2");
    DirichletCharacter prod = w1.finite_part * w2.finite_part;
    auto roots = square_roots(prod, p);
    if (roots.empty())
        throw std::logic_error("square root must exist when parity passes");
    if (tau_index >= roots.size())
        throw validation_error("tau index out of range");
    long half = (s - eps) / 2;
    return ClassicalPoint{w1, w2, cbar, roots[tau_index], half, p};
}

/// Crystalline: chi1, chi2, tau all trivial, and floor((c1+c2)/2) lands on the
/// chosen component cbar mod p-1 (the mod 2p-2 congruence on c1+c2).
inline bool is_crystalline(const ClassicalPoint& pt) {
    if (!pt.weight1.finite_part.is_trivial()) return false;
    if (!pt.weight2.finite_part.is_trivial()) return false;
    if (!pt.tau.is_trivial()) return false;
    long pm1 = static_cast<long>(pt.p - 1);
    return ((pt.half_weight - pt.cbar) % pm1 + pm1) % pm1 == 0;
}

/// Fully ramified: both tau and chi1/tau are nontrivial on Z_p^x.
inline bool is_fully_ramified(const ClassicalPoint& pt) {
    if (pt.tau.is_trivial()) return false;
    return !(pt.weight1.finite_part / pt.tau).is_trivial();
}

}  // namespace ggp
