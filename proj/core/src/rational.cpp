#include "tidiv/rational.hpp"

#include <algorithm>

namespace tidiv {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational r(text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        if (r.get_den() < 0) throw std::invalid_argument("negative denominator: " + text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::size_t coefficient_bits(const Rational& value) {
    std::size_t nb = mpz_sizeinbase(value.get_num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(value.get_den().get_mpz_t(), 2);
    return std::max(nb, db);
}

bool perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

}  // namespace tidiv
