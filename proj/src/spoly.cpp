#include "mero/spoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mero {

Rat SPoly::eval(const Rat& s0) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * s0 + c_[i];
    return acc;
}

SPoly SPoly::operator*(const SPoly& o) const {
    if (is_zero() || o.is_zero()) return SPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return SPoly(std::move(r));
}

SPoly SPoly::operator+(const SPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return SPoly(std::move(r));
}

MPoly SPoly::to_mpoly(const std::vector<std::string>& vars, size_t s_index) const {
    MPoly p{std::vector<std::string>(vars)};
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        ExpVec e(vars.size(), 0);
        e[s_index] = (int)k;
        p.add_term(e, c_[k]);
    }
    return p;
}

SPoly SPoly::from_mpoly(const MPoly& p, size_t s_index) {
    std::vector<Rat> c(p.degree_in(s_index) + 1, Rat(0));
    for (const auto& [e, k] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != s_index && e[i] != 0)
                throw std::invalid_argument("SPoly::from_mpoly: not univariate in s");
        c[e[s_index]] = k;
    }
    return SPoly(std::move(c));
}

std::string SPoly::str() const {
    std::vector<std::string> vars = {"s"};
    return to_mpoly(vars, 0).str();
}

}  // namespace mero
