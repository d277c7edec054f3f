#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbivir/rational.hpp"

namespace orbivir {

// Linear form a_0 + sum_j a_j * c_j over the opaque coefficient symbols
// c_1, c_2, ... (1-based, one family per monodromy profile). Lets identity
// sweeps assert statements valid for every choice of Hurwitz-Hodge input.
class LinearForm {
  public:
    LinearForm() = default;
    /*implicit*/ LinearForm(Rational constant) : constant_(std::move(constant)) {}

    static LinearForm symbol(std::size_t index, Rational scale = Rational(1)) {
        LinearForm f;
        if (scale != 0)
            f.coeffs_[index] = std::move(scale);
        return f;
    }

    const Rational& constant() const { return constant_; }
    const std::map<std::size_t, Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(std::size_t index) const {
        auto it = coeffs_.find(index);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }

    LinearForm& operator+=(const LinearForm& o) {
        constant_ += o.constant_;
        for (const auto& [k, v] : o.coeffs_)
            add_coeff(k, v);
        return *this;
    }

    LinearForm& operator-=(const LinearForm& o) {
        constant_ -= o.constant_;
        for (const auto& [k, v] : o.coeffs_)
            add_coeff(k, -v);
        return *this;
    }

    LinearForm& operator*=(const Rational& s) {
        if (s == 0)
            return *this = LinearForm();
        constant_ *= s;
        for (auto& [k, v] : coeffs_)
            v *= s;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& s, LinearForm f) { return f *= s; }
    friend LinearForm operator*(LinearForm f, const Rational& s) { return f *= s; }
    friend LinearForm operator-(LinearForm f) { return f *= Rational(-1); }

    bool operator==(const LinearForm& o) const {
        return constant_ == o.constant_ && coeffs_ == o.coeffs_;
    }

    Rational evaluate(const std::vector<Rational>& c) const {
        Rational r = constant_;
        for (const auto& [k, v] : coeffs_) {
            if (k == 0 || k > c.size())
                throw range_error("linear form symbol out of range");
            r += v * c[k - 1];
        }
        return r;
    }

    // "384*c1 + 128*c2 + ..."; the bare constant prints as a rational.
    std::string str() const {
        if (coeffs_.empty())
            return to_string(constant_);
        std::string out;
        if (constant_ != 0)
            out = to_string(constant_);
        for (const auto& [k, v] : coeffs_) {
            if (!out.empty()) {
                if (v < 0)
                    out += " - " + to_string(-v);
                else
                    out += " + " + to_string(v);
            } else {
                out = to_string(v);
            }
            out += "*c" + std::to_string(k);
        }
        return out;
    }

  private:
    void add_coeff(std::size_t k, const Rational& v) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (v != 0)
                coeffs_[k] = v;
            return;
        }
        it->second += v;
        if (it->second == 0)
            coeffs_.erase(it);
    }

    Rational constant_ = 0;
    std::map<std::size_t, Rational> coeffs_;
};

} // namespace orbivir
