#pragma once

#include <set>
#include <string>
#include <vector>

namespace equigrass {

// Sparse polynomial over F2 in a fixed number of variables.
class F2Poly {
public:
    using Exponents = std::vector<int>;

    F2Poly() = default;
    explicit F2Poly(int nvars) : nvars_(nvars) {}

    static F2Poly one(int nvars);
    static F2Poly var(int nvars, int i, int e = 1);  // 0-based variable index
    static F2Poly monomial(Exponents e);

    int nvars() const { return nvars_; }
    const std::set<Exponents>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void toggle(const Exponents& e);

    F2Poly& operator+=(const F2Poly& o);
    F2Poly operator+(const F2Poly& o) const { F2Poly r = *this; r += o; return r; }
    F2Poly operator*(const F2Poly& o) const;
    F2Poly pow(int e) const;

    bool operator==(const F2Poly&) const = default;

    // e.g. names "w" -> "w_1 w_2 + w_1^3"; weights give the degree used for ordering terms
    std::string to_string(const std::string& name, const std::vector<int>& weights = {}) const;

private:
    int nvars_ = 0;
    std::set<Exponents> terms_;
};

}  // namespace equigrass
