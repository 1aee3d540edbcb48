#pragma once

#include <map>
#include <string>

#include "lomat/tower.hpp"

namespace lomat {

// exponent of a prime in a Steinitz number: a positive integer or infinity
struct StExp {
    bool inf = false;
    unsigned long val = 0;  // meaningful only when !inf

    static StExp infinite() { return StExp{true, 0}; }
    static StExp finite(unsigned long v) { return StExp{false, v}; }

    friend bool operator==(const StExp& a, const StExp& b) {
        return a.inf == b.inf && (a.inf || a.val == b.val);
    }
};

/*
 * Steinitz (supernatural) number with finite support: a map prime ->
 * exponent where absent primes carry exponent 0 and no stored exponent is 0.
 * The default-constructed value is the number 1 (empty product).
 */
class Steinitz {
public:
    Steinitz() = default;

    const std::map<unsigned long, StExp>& support() const { return sup_; }

    // stored exponent of p (finite 0 when absent)
    StExp exponent(unsigned long p) const;

    // validates p prime; a finite exponent of 0 erases the entry
    void set(unsigned long p, StExp e);

    friend bool operator==(const Steinitz& a, const Steinitz& b) {
        return a.sup_ == b.sup_;
    }

private:
    std::map<unsigned long, StExp> sup_;
};

bool is_prime(unsigned long p);

Steinitz st_from_nat(unsigned long n);
Steinitz st_mul(const Steinitz& s, const Steinitz& t);
bool st_divides(const Steinitz& s, const Steinitz& t);
Steinitz st_lcm(const Steinitz& s, const Steinitz& t);
Steinitz st_gcd(const Steinitz& s, const Steinitz& t);
bool st_is_locally_finite(const Steinitz& s);

// the Steinitz number (r/n)*s; throws not_divisible when some exponent
// would go negative, bad_parameters unless 1 <= r <= n
Steinitz st_corner(const Steinitz& s, unsigned long r, unsigned long n);

// supremum of st_from_nat(n_i) over all stages: a prime dividing any cycle
// multiplier gets exponent infinity, the rest comes from n1 and the prefix
Steinitz st_of_tower(const TowerDescriptor& d);

// canonical form "2^inf*3^2*5", primes ascending, "1" for the empty product
std::string st_str(const Steinitz& s);
Steinitz st_parse(const std::string& text);

} // namespace lomat
