#ifndef SYMINT_RATIONAL_HPP
#define SYMINT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace symint {

using rat = mpq_class;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline rat rat_of(long n, long d = 1) {
    rat q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const rat& q) { return q.get_den() == 1; }

inline long to_long(const rat& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw domain_error("rational does not fit a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

// q^e for integer e; 0^0 and 0^negative are domain errors.
inline rat pow_rat(const rat& q, long e) {
    if (q == 0 && e <= 0) throw domain_error(e == 0 ? "0^0" : "0 raised to a negative power");
    if (e == 0) return rat(1);
    mpz_class n, d;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), a);
    rat r = (e > 0) ? rat(n, d) : rat(d, n);
    r.canonicalize();
    return r;
}

// Exact k-th root when it exists (k >= 1). Negative bases allowed for odd k.
inline std::optional<rat> root_rat(const rat& q, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return q;
    if (q < 0 && k % 2 == 0) return std::nullopt;
    mpz_class n, d;
    int exact_n = mpz_root(n.get_mpz_t(), q.get_num().get_mpz_t(), k);
    int exact_d = mpz_root(d.get_mpz_t(), q.get_den().get_mpz_t(), k);
    if (!exact_n || !exact_d) return std::nullopt;
    rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const rat& q) { return q.get_str(); }

}  // namespace symint

#endif
