#include "lomat/steinitz.hpp"

#include <gmpxx.h>

#include <cctype>

#include "lomat/error.hpp"

namespace lomat {

bool is_prime(unsigned long p) {
    if (p < 2)
        return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

StExp Steinitz::exponent(unsigned long p) const {
    auto it = sup_.find(p);
    return it == sup_.end() ? StExp::finite(0) : it->second;
}

void Steinitz::set(unsigned long p, StExp e) {
    if (!is_prime(p))
        throw Error(Errc::bad_parameters, "Steinitz support key " + std::to_string(p) + " is not prime");
    if (!e.inf && e.val == 0)
        sup_.erase(p);
    else
        sup_[p] = e;
}

Steinitz st_from_nat(unsigned long n) {
    if (n == 0)
        throw Error(Errc::bad_parameters, "st_from_nat needs n >= 1");
    Steinitz s;
    unsigned long m = n;
    for (unsigned long p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
        unsigned long e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0)
            s.set(p, StExp::finite(e));
    }
    if (m > 1)
        s.set(m, StExp::finite(1));
    return s;
}

Steinitz st_mul(const Steinitz& s, const Steinitz& t) {
    Steinitz r = s;
    for (const auto& [p, e] : t.support()) {
        StExp cur = r.exponent(p);
        if (cur.inf || e.inf)
            r.set(p, StExp::infinite());
        else
            r.set(p, StExp::finite(cur.val + e.val));
    }
    return r;
}

bool st_divides(const Steinitz& s, const Steinitz& t) {
    for (const auto& [p, e] : s.support()) {
        StExp te = t.exponent(p);
        if (te.inf)
            continue;
        if (e.inf || e.val > te.val)
            return false;
    }
    return true;
}

Steinitz st_lcm(const Steinitz& s, const Steinitz& t) {
    Steinitz r = s;
    for (const auto& [p, e] : t.support()) {
        StExp cur = r.exponent(p);
        if (cur.inf || e.inf)
            r.set(p, StExp::infinite());
        else
            r.set(p, StExp::finite(std::max(cur.val, e.val)));
    }
    return r;
}

Steinitz st_gcd(const Steinitz& s, const Steinitz& t) {
    Steinitz r;
    for (const auto& [p, e] : s.support()) {
        StExp te = t.exponent(p);
        if (e.inf && te.inf)
            r.set(p, StExp::infinite());
        else if (e.inf)
            r.set(p, te);
        else if (te.inf)
            r.set(p, e);
        else
            r.set(p, StExp::finite(std::min(e.val, te.val)));
    }
    return r;
}

bool st_is_locally_finite(const Steinitz& s) {
    for (const auto& [p, e] : s.support())
        if (e.inf)
            return false;
    return true;
}

Steinitz st_corner(const Steinitz& s, unsigned long r, unsigned long n) {
    if (r < 1 || r > n)
        throw Error(Errc::bad_parameters, "st_corner needs 1 <= r <= n");
    Steinitz rs = st_mul(st_from_nat(r), s);
    Steinitz out;
    Steinitz nf = st_from_nat(n);
    // every prime of n must be covered; other primes pass through
    for (const auto& [p, e] : rs.support()) {
        StExp ne = nf.exponent(p);
        if (e.inf) {
            out.set(p, StExp::infinite());
        } else if (e.val < ne.val) {
            throw Error(Errc::not_divisible,
                        "corner exponent of " + std::to_string(p) + " would be negative");
        } else {
            out.set(p, StExp::finite(e.val - ne.val));
        }
    }
    for (const auto& [p, ne] : nf.support()) {
        (void)ne;
        if (rs.exponent(p) == StExp::finite(0))
            throw Error(Errc::not_divisible,
                        "corner exponent of " + std::to_string(p) + " would be negative");
    }
    return out;
}

Steinitz st_of_tower(const TowerDescriptor& d) {
    d.validate();
    Steinitz fin = st_from_nat(d.n1);
    for (unsigned long m : d.prefix)
        fin = st_mul(fin, st_from_nat(m));
    Steinitz out = fin;
    for (unsigned long m : d.cycle) {
        Steinitz f = st_from_nat(m);
        for (const auto& [p, e] : f.support()) {
            (void)e;
            out.set(p, StExp::infinite());
        }
    }
    return out;
}

std::string st_str(const Steinitz& s) {
    if (s.support().empty())
        return "1";
    std::string out;
    for (const auto& [p, e] : s.support()) {
        if (!out.empty())
            out += '*';
        out += std::to_string(p);
        if (e.inf)
            out += "^inf";
        else if (e.val != 1)
            out += '^' + std::to_string(e.val);
    }
    return out;
}

namespace {

unsigned long parse_ulong(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error(Errc::parse_error, "expected a number in Steinitz literal '" + text + "'");
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        unsigned long digit = static_cast<unsigned long>(text[pos] - '0');
        if (v > (~0ul - digit) / 10)
            throw Error(Errc::parse_error, "number too large in Steinitz literal");
        v = v * 10 + digit;
        ++pos;
    }
    return v;
}

} // namespace

Steinitz st_parse(const std::string& text) {
    if (text == "1")
        return Steinitz{};
    if (text.empty())
        throw Error(Errc::parse_error, "empty Steinitz literal");
    Steinitz s;
    unsigned long last_prime = 0;
    std::size_t pos = 0;
    for (;;) {
        unsigned long p = parse_ulong(text, pos);
        if (!is_prime(p))
            throw Error(Errc::parse_error, std::to_string(p) + " is not prime");
        if (p <= last_prime)
            throw Error(Errc::parse_error, "primes must be strictly ascending");
        last_prime = p;
        StExp e = StExp::finite(1);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (text.compare(pos, 3, "inf") == 0) {
                e = StExp::infinite();
                pos += 3;
            } else {
                unsigned long v = parse_ulong(text, pos);
                if (v == 0)
                    throw Error(Errc::parse_error, "exponent must be >= 1");
                e = StExp::finite(v);
            }
        }
        s.set(p, e);
        if (pos == text.size())
            break;
        if (text[pos] != '*')
            throw Error(Errc::parse_error, std::string("unexpected character '") + text[pos] + "'");
        ++pos;
    }
    return s;
}

} // namespace lomat
