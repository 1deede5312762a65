#include "covol/zeta.hpp"

#include "covol/errors.hpp"

#include <mutex>

namespace covol {

const std::vector<uint32_t>& primes_upto(uint32_t n) {
    static std::vector<uint32_t> primes;
    static uint32_t limit = 0;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n <= limit) return primes;
    uint32_t new_limit = std::max(n, 1u << 16);
    std::vector<bool> sieve(new_limit + 1, true);
    primes.clear();
    for (uint32_t i = 2; i <= new_limit; ++i) {
        if (!sieve[i]) continue;
        primes.push_back(i);
        for (uint64_t j = (uint64_t)i * i; j <= new_limit; j += i) sieve[j] = false;
    }
    limit = new_limit;
    return primes;
}

namespace {

// local Euler factor of zeta_k(2) at p as an exact rational
Rat local_factor(const NumberField& field, uint32_t p) {
    Rat factor = 1;
    if (field.degree() == 2 && field.index() == 1 && p > 2) {
        // quadratic fast path through the Kronecker symbol
        if (field.disc() % p == 0) {
            Int p2 = Int(p) * p;
            factor = Rat(p2, p2 - 1);
        } else {
            int chi = mpz_kronecker_ui(field.disc().get_mpz_t(), p);
            Int p2 = Int(p) * p;
            if (chi == 1) {
                factor = Rat(p2, p2 - 1);
                factor *= factor;
            } else {
                Int p4 = p2 * p2;
                factor = Rat(p4, p4 - 1);
            }
        }
        return factor;
    }
    SplittingType st = field.split_prime(p);
    for (size_t i = 0; i < st.factors.size(); ++i) {
        Int nv2 = int_pow(Int(p), 2 * (unsigned long)st.factors[i].f);
        factor *= Rat(nv2, nv2 - 1);
    }
    return factor;
}

RatInterval apply_tail(const RatInterval& partial, int m, uint32_t P) {
    // log tail <= m * (sum_{n>P} n^-2) / (1 - P^-2) <= m P / (P^2 - 1) =: L
    Rat L = Rat(Int(m) * P, Int(P) * P - 1);
    if (L >= 1) fail(Errc::TailTooWide, "tail bound exceeds 1 at P=" + std::to_string(P));
    Rat tail_hi = 1 + L / (1 - L); // e^x <= 1 + x/(1-x)
    return {partial.lo, partial.hi * tail_hi};
}

} // namespace

RatInterval zeta2_euler(const NumberField& field, uint32_t P, unsigned bits) {
    if (P < 100) fail(Errc::UsageError, "prime bound must be >= 100");
    RatInterval prod{Rat(1)};
    for (uint32_t p : primes_upto(P)) {
        if (p > P) break;
        prod = (prod * RatInterval(local_factor(field, p))).round_out(bits);
    }
    return apply_tail(prod, field.degree(), P);
}

RatInterval functional_transfer(const NumberField& field, const RatInterval& zeta2, unsigned bits) {
    int m = field.degree();
    RatInterval pi2m = iv_pow(pi_enclosure(bits), 2 * (unsigned long)m);
    RatInterval d32 = iv_pow_3_2(field.disc(), bits);
    RatInterval value = d32 * zeta2 / (RatInterval(Rat(pow2((unsigned long)m))) * pi2m);
    if (m % 2 == 1) value = -value;
    return value.round_out(bits);
}

namespace {

bool is_integer(const Rat& x) { return x.get_den() == 1; }

// simplest rational in closed [lo, hi] (minimal denominator, then nearest 0)
Rat simplest_in(const Rat& lo, const Rat& hi) {
    if (lo > hi) fail(Errc::UsageError, "empty interval");
    Int a = rat_ceil(lo), b = rat_floor(hi);
    if (a <= b) {
        if (a <= 0 && 0 <= b) return 0;
        return a > 0 ? Rat(a) : Rat(b);
    }
    if (lo > 0) {
        Int fl = rat_floor(lo);
        Rat inner = simplest_in(1 / (hi - fl), 1 / (lo - fl));
        return Rat(fl) + 1 / inner;
    }
    return -simplest_in(-hi, -lo);
}

// strict Farey_Q neighbors of x: the largest element < x and the smallest
// element > x with denominator <= Q, by exact scan over denominators
std::pair<Rat, Rat> farey_neighbors(const Rat& x, const Int& Q) {
    Rat below, above;
    bool first = true;
    for (Int q = 1; q <= Q; ++q) {
        Rat xq = x * q;
        Int lo_num = rat_ceil(xq) - 1;               // largest p with p/q < x
        Int hi_num = rat_floor(xq) + 1;              // smallest p with p/q > x
        if (is_integer(xq)) { lo_num = xq.get_num() - 1; hi_num = xq.get_num() + 1; }
        Rat cand_lo(lo_num, q), cand_hi(hi_num, q);
        cand_lo.canonicalize();
        cand_hi.canonicalize();
        if (first || cand_lo > below) below = cand_lo;
        if (first || cand_hi < above) above = cand_hi;
        first = false;
    }
    return {below, above};
}

} // namespace

Reconstruction reconstruct_rational(const RatInterval& iv, const Int& Q_max) {
    if (Q_max < 1) fail(Errc::UsageError, "Q_max must be >= 1");
    Rat r = simplest_in(iv.lo, iv.hi);
    if (r.get_den() > Q_max) fail(Errc::NoRational, "no denominator <= " + Q_max.get_str() + " in interval");
    auto [below, above] = farey_neighbors(r, Q_max);
    if (below >= iv.lo || above <= iv.hi)
        fail(Errc::Ambiguous, "several candidates with denominator <= " + Q_max.get_str());
    // margin: distance from the interval edges to the next admissible rationals
    Rat margin = std::min(iv.lo - below, above - iv.hi);
    return {r, margin};
}

Rat quadratic_zeta_oracle(const Int& D) {
    if (D <= 0) fail(Errc::NotFundamental, "discriminant must be positive");
    Int rem = D % 4;
    Int core = D;
    if (rem == 0) {
        core = D / 4;
        Int c4 = core % 4;
        if (c4 == 1 || c4 == 0) fail(Errc::NotFundamental, D.get_str() + " is not fundamental");
    } else if (rem != 1) {
        fail(Errc::NotFundamental, D.get_str() + " is not 0 or 1 mod 4");
    }
    // squarefree check on the odd core
    for (Int q = 2; q * q <= core; ++q)
        if (core % (q * q) == 0) fail(Errc::NotFundamental, D.get_str() + " has a square factor");
    if (D == 1) fail(Errc::NotFundamental, "1 is not a field discriminant");

    auto sigma1 = [](Int n) {
        Int s = 0;
        for (Int d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                s += d;
                if (d * d != n) s += n / d;
            }
        return s;
    };
    Int total = 0;
    Int r = sqrt(D);
    for (Int b = -r; b <= r; ++b) {
        if (b * b >= D) continue;
        if ((D - b) % 2 != 0) continue; // b = D mod 2
        total += sigma1((D - b * b) / 4);
    }
    Rat out(total, 60);
    out.canonicalize();
    return out;
}

ZetaResult compute_zeta(const NumberField& field, const ZetaOptions& opts) {
    ZetaResult res;
    RatInterval partial{Rat(1)};
    uint32_t done = 0;
    for (uint32_t P = opts.prime_bound; P <= opts.prime_cap; P *= 10) {
        const auto& ps = primes_upto(P);
        for (uint32_t p : ps) {
            if (p <= done || p > P) continue;
            partial = (partial * RatInterval(local_factor(field, p))).round_out(opts.bits);
        }
        done = P;
        res.prime_bound = P;
        res.zeta2 = apply_tail(partial, field.degree(), P);
        res.zeta_m1_interval = functional_transfer(field, res.zeta2, opts.bits);
        try {
            auto rec = reconstruct_rational(res.zeta_m1_interval, opts.q_max);
            res.zeta_m1 = rec.value;
            res.margin = rec.margin;
            return res;
        } catch (const Error& e) {
            if (e.code() != Errc::Ambiguous || (uint64_t)P * 10 > opts.prime_cap) throw;
        }
    }
    fail(Errc::TailTooWide, "prime cap reached before unique reconstruction");
}

} // namespace covol
