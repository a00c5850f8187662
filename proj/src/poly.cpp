#include "ectk/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ectk/domain.hpp"

namespace ectk {

std::string VarId::str() const {
    return "x[" + std::to_string(component) + "][" + std::to_string(index) + "]";
}

VarId VarId::parse(const std::string& s) {
    int comp = 0, idx = 0;
    char x = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0;
    std::istringstream in(s);
    in >> x >> b1 >> comp >> b2 >> b3 >> idx >> b4;
    if (!in || x != 'x' || b1 != '[' || b2 != ']' || b3 != '[' || b4 != ']' ||
        comp < 1 || idx < 1 || in.peek() != EOF)
        throw std::invalid_argument("bad variable name: " + s);
    return VarId{comp, idx};
}

Monomial Monomial::var(VarId v, int exp) {
    Monomial m;
    if (exp < 0) throw std::domain_error("negative exponent");
    if (exp > 0) {
        m.exps_.emplace_back(v, exp);
        m.degree_ = exp;
    }
    return m;
}

Monomial Monomial::from_exponents(std::vector<std::pair<VarId, int>> exps) {
    std::sort(exps.begin(), exps.end());
    Monomial m;
    for (auto& [v, e] : exps) {
        if (e < 0) throw std::domain_error("negative exponent");
        if (e == 0) continue;
        if (!m.exps_.empty() && m.exps_.back().first == v)
            m.exps_.back().second += e;
        else
            m.exps_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(v, 0));
    return (it != exps_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first))
            r.exps_.push_back(*a++);
        else if (a == exps_.end() || b->first < a->first)
            r.exps_.push_back(*b++);
        else {
            r.exps_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    return 0;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (auto& [v, e] : exps_) {
        if (!out.empty()) out += "*";
        out += v.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const BigInt& coeff) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = degree();
    for (auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const BigInt& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Rat Polynomial::evaluate(const std::map<VarId, Rat>& assignment) const {
    Rat total(0);
    for (auto& [m, c] : terms_) {
        Rat term(c);
        for (auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::domain_error("evaluate: no value for " + v.str());
            term *= rat_pow(it->second, e);
        }
        total += term;
    }
    return total;
}

Rat Polynomial::evaluate_all_ones() const {
    Rat total(0);
    for (auto& [m, c] : terms_) total += Rat(c);
    return total;
}

Polynomial Polynomial::map_vars(const std::function<VarId(VarId)>& f) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        std::vector<std::pair<VarId, int>> exps;
        exps.reserve(m.exponents().size());
        for (auto& [v, e] : m.exponents()) exps.emplace_back(f(v), e);
        r.add_term(Monomial::from_exponents(std::move(exps)), c);
    }
    return r;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.exponents()) vars.insert(v);
    return vars;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1 || m.is_one()) {
            out += a.get_str();
            if (!m.is_one()) out += "*";
        }
        if (!m.is_one()) out += m.str();
    }
    return out;
}

nlohmann::json Polynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : terms_) {
        nlohmann::json exps = nlohmann::json::object();
        for (auto& [v, e] : m.exponents()) exps[v.str()] = e;
        terms.push_back({{"exps", exps}, {"coeff", c.get_str()}});
    }
    return {{"terms", terms}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
    Polynomial p;
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial json: expected {\"terms\":[...]}");
    for (auto& t : j["terms"]) {
        std::vector<std::pair<VarId, int>> exps;
        for (auto& [key, val] : t.at("exps").items())
            exps.emplace_back(VarId::parse(key), val.get<int>());
        BigInt coeff(t.at("coeff").get<std::string>());
        p.add_term(Monomial::from_exponents(std::move(exps)), coeff);
    }
    return p;
}

Polynomial e_sym(const Shape& shape, int component, const std::set<int>& excluded, int j) {
    if (component < 1 || component > shape.k())
        throw std::domain_error("e_sym: component out of range");
    if (j < 0) throw std::domain_error("e_sym: negative degree");
    std::vector<int> avail;
    for (int v = 1; v <= shape.size(component); ++v)
        if (!excluded.count(v)) avail.push_back(v);

    Polynomial out;
    int n = (int)avail.size();
    if (j > n) return out;  // zero
    if (j == 0) return Polynomial(1);

    std::vector<int> pick(j);
    for (int i = 0; i < j; ++i) pick[i] = i;
    while (true) {
        std::vector<std::pair<VarId, int>> exps;
        exps.reserve(j);
        for (int i : pick) exps.emplace_back(VarId{component, avail[(size_t)i]}, 1);
        out.add_term(Monomial::from_exponents(std::move(exps)), 1);

        int pos = j - 1;
        while (pos >= 0 && pick[(size_t)pos] == n - j + pos) --pos;
        if (pos < 0) break;
        ++pick[(size_t)pos];
        for (int i = pos + 1; i < j; ++i) pick[(size_t)i] = pick[(size_t)i - 1] + 1;
    }
    return out;
}

Polynomial e_sym(const Shape& shape, int component, int j) {
    return e_sym(shape, component, {}, j);
}

}  // namespace ectk
