#include "mzv/ratfunc.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "mzv/errors.hpp"

namespace mzv {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) {
        c_.push_back(c);
    }
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly Poly::variable() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) {
        throw DomainError("leading coefficient of zero polynomial");
    }
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

namespace {

// Clears denominators: p == (1/den) * sum v[i] x^i with integer v.
std::pair<std::vector<Integer>, Integer> cleared(const Poly& p) {
    Integer den(1);
    for (int i = 0; i <= p.degree(); ++i) {
        const Integer d = p.coeff(i).denominator();
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    std::vector<Integer> v;
    v.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coeff(i);
        v.push_back(c.numerator() * (den / c.denominator()));
    }
    return {std::move(v), std::move(den)};
}

} // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    // Convolve over the integers: rational coefficient arithmetic pays for a
    // gcd normalization per operation, an integer pass needs one per output
    // coefficient.
    const auto [va, da] = cleared(a);
    const auto [vb, db] = cleared(b);
    std::vector<Integer> conv(va.size() + vb.size() - 1, Integer(0));
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i].is_zero()) continue;
        for (std::size_t j = 0; j < vb.size(); ++j) {
            if (!vb[j].is_zero()) conv[i + j] += va[i] * vb[j];
        }
    }
    const Integer den = da * db;
    std::vector<Rational> rc;
    rc.reserve(conv.size());
    for (const Integer& c : conv) {
        rc.emplace_back(c, den);
    }
    return Poly(std::move(rc));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    Poly rem = a;
    Poly quot;
    const int db = b.degree();
    if (rem.degree() >= db) {
        quot.c_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rational(0));
    }
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const Rational factor = rem.leading() / b.leading();
        quot.c_[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= db; ++i) {
            rem.c_[static_cast<std::size_t>(i + shift)] -= factor * b.c_[static_cast<std::size_t>(i)];
        }
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

namespace {

// Divides out the integer content and makes the leading entry positive.
void make_primitive(std::vector<Integer>& v) {
    Integer g(0);
    for (const Integer& c : v) {
        g = boost::multiprecision::gcd(g, c);
    }
    if (g.is_zero()) return;
    if (v.back() < 0) g = -g;
    for (Integer& c : v) c /= g;
}

// Primitive integer image of a rational polynomial (same roots).
std::vector<Integer> primitive_scale(const Poly& p) {
    std::vector<Integer> v = cleared(p).first;
    make_primitive(v);
    return v;
}

// Exact pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b: every
// elimination step scales the tail by lc(b), even for a vanishing top
// coefficient, so the scale factor is exactly that power.
std::vector<Integer> pseudo_rem(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() > db) {
        const Integer top = a.back();
        a.pop_back();
        for (Integer& c : a) c *= lb;
        if (!top.is_zero()) {
            const std::size_t off = a.size() - db;
            for (std::size_t i = 0; i < db; ++i) {
                a[off + i] -= top * b[i];
            }
        }
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

Integer int_pow(const Integer& base, std::size_t e) {
    Integer r(1);
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(Rational(1));
    // Subresultant polynomial remainder sequence over the integers: each
    // pseudo-remainder is divided by a predicted exact divisor, which keeps
    // coefficient growth polynomial without any content gcds in the loop.
    // Signs are discarded throughout (divisors taken without the classical
    // -1 factors); that perturbs every row by a unit only, so the exact
    // divisions survive and the final monic normalization is unaffected.
    std::vector<Integer> u = primitive_scale(a);
    std::vector<Integer> v = primitive_scale(b);
    if (u.size() < v.size()) u.swap(v);
    Integer g(1), h(1);
    while (true) {
        const std::size_t delta = u.size() - v.size();
        std::vector<Integer> r = pseudo_rem(u, v);
        if (r.size() == 1) return Poly(Rational(1));
        if (r.empty()) break;
        const Integer divisor = g * int_pow(h, delta);
        u.swap(v);
        v.swap(r);
        for (Integer& c : v) c /= divisor;
        g = u.back();
        if (delta > 0) {
            h = int_pow(g, delta) / int_pow(h, delta - 1);
        }
    }
    make_primitive(v);
    std::vector<Rational> rc;
    rc.reserve(v.size());
    const Integer lead = v.back();
    for (const Integer& c : v) {
        rc.emplace_back(c, lead);
    }
    return Poly(std::move(rc));
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) {
        return *this;
    }
    Poly r(*this);
    const Rational lead = leading();
    for (auto& c : r.c_) {
        c /= lead;
    }
    return r;
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag.is_one() && i > 0;
        if (!unit) os << mag.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Trial division by the monic linear factor d + q: replaces p by the exact
// quotient and returns true, or leaves p untouched.  One Horner pass.
bool div_linear(Poly& p, const Rational& q) {
    const std::vector<Rational>& a = p.coeffs();
    if (a.size() < 2) {
        return false;
    }
    const std::size_t n = a.size() - 1;
    std::vector<Rational> c(n);
    c[n - 1] = a[n];
    for (std::size_t i = n - 1; i > 0; --i) {
        c[i - 1] = a[i] - q * c[i];
    }
    if (a[0] != q * c[0]) {
        return false;
    }
    p = Poly(std::move(c));
    return true;
}

} // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw DivisionByZero("rational function with zero denominator");
    }
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        factored_ = true;
        return;
    }
    if (num_.degree() > 0 && den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        den_ = den_.monic();
        std::vector<Rational> scaled;
        scaled.reserve(static_cast<std::size_t>(num_.degree()) + 1);
        for (int i = 0; i <= num_.degree(); ++i) {
            scaled.push_back(num_.coeff(i) / lead);
        }
        num_ = Poly(std::move(scaled));
    }
    recognize_factors();
}

void RatFunc::recognize_factors() {
    denf_.clear();
    const int k = den_.degree();
    if (k == 0) {
        factored_ = true;
        return;
    }
    // A monic degree-k denominator is the pure power (d + q)^k exactly when
    // its coefficients match the binomial expansion for q = coeff(k-1)/k;
    // that covers the depth-1 seeds, and linear denominators trivially.
    const Rational q = den_.coeff(k - 1) / Rational(k);
    Rational qpow(q);
    for (int i = 2; i <= k; ++i) {
        qpow *= q;
        if (den_.coeff(k - i) != Rational(binomial(k, i)) * qpow) {
            factored_ = false;
            return;
        }
    }
    denf_.emplace_back(q, k);
    factored_ = true;
}

RatFunc RatFunc::reduced_factored(Poly num, Poly den,
                                  std::vector<std::pair<Rational, int>> f) {
    RatFunc r;
    if (num.is_zero()) {
        return r;
    }
    for (auto& [q, e] : f) {
        while (e > 0 && div_linear(num, q)) {
            div_linear(den, q);
            --e;
        }
    }
    std::erase_if(f, [](const auto& fe) { return fe.second == 0; });
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.denf_ = std::move(f);
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

namespace {

// Merge of two sorted factor lists, adding exponents of shared factors.
std::vector<std::pair<Rational, int>> merge_factors(
    const std::vector<std::pair<Rational, int>>& fa,
    const std::vector<std::pair<Rational, int>>& fb) {
    std::vector<std::pair<Rational, int>> out;
    out.reserve(fa.size() + fb.size());
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].first < fa[i].first) {
            out.push_back(fb[j++]);
        } else {
            out.emplace_back(fa[i].first, fa[i].second + fb[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.factored_ && b.factored_) {
        // Combine over the lcm read off the factor lists: cof_a extends
        // a.den_ to the lcm (b's exponent surplus) and vice versa, so no
        // gcd is ever taken; the shared-denominator case costs nothing.
        Poly cof_a(Rational(1)), cof_b(Rational(1));
        std::vector<std::pair<Rational, int>> merged;
        merged.reserve(a.denf_.size() + b.denf_.size());
        std::size_t i = 0, j = 0;
        while (i < a.denf_.size() || j < b.denf_.size()) {
            int ea = 0, eb = 0;
            Rational q;
            const bool use_a =
                i < a.denf_.size() &&
                (j == b.denf_.size() || !(b.denf_[j].first < a.denf_[i].first));
            const bool use_b =
                j < b.denf_.size() &&
                (i == a.denf_.size() || !(a.denf_[i].first < b.denf_[j].first));
            if (use_a) {
                q = a.denf_[i].first;
                ea = a.denf_[i].second;
                ++i;
            }
            if (use_b) {
                q = b.denf_[j].first;
                eb = b.denf_[j].second;
                ++j;
            }
            const int e = std::max(ea, eb);
            merged.emplace_back(q, e);
            const Poly lin(std::vector<Rational>{q, Rational(1)});
            for (int t = ea; t < e; ++t) cof_a *= lin;
            for (int t = eb; t < e; ++t) cof_b *= lin;
        }
        return RatFunc::reduced_factored(a.num_ * cof_a + b.num_ * cof_b,
                                         a.den_ * cof_a, std::move(merged));
    }
    if (a.den_ == b.den_) {
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    // Combine over the lcm of the denominators; the direct cross product
    // would hand the constructor a needlessly large gcd to strip back out.
    const Poly g = Poly::gcd(a.den_, b.den_);
    if (g.degree() == 0) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    const Poly da_red = Poly::divmod(a.den_, g).first;
    const Poly db_red = Poly::divmod(b.den_, g).first;
    return RatFunc(a.num_ * db_red + b.num_ * da_red, a.den_ * db_red);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.factored_ && b.factored_) {
        return RatFunc::reduced_factored(a.num_ * b.num_, a.den_ * b.den_,
                                         merge_factors(a.denf_, b.denf_));
    }
    // Cross-cancel first: inputs are canonical, so the remaining gcds are
    // between a's numerator and b's denominator and vice versa.
    Poly na = a.num_, db = b.den_;
    Poly g1 = Poly::gcd(na, db);
    if (g1.degree() > 0) {
        na = Poly::divmod(na, g1).first;
        db = Poly::divmod(db, g1).first;
    }
    Poly nb = b.num_, da = a.den_;
    Poly g2 = Poly::gcd(nb, da);
    if (g2.degree() > 0) {
        nb = Poly::divmod(nb, g2).first;
        da = Poly::divmod(da, g2).first;
    }
    return RatFunc(na * nb, da * db);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) {
        throw DivisionByZero("rational function division by zero");
    }
    return a * RatFunc(b.den_, b.num_);
}

Rational RatFunc::evaluate(const Rational& x) const {
    const Rational d = den_.evaluate(x);
    if (d.is_zero()) {
        throw PoleAtZero("rational function has a pole at the evaluation point");
    }
    return num_.evaluate(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_ == Poly(Rational(1))) {
        return num_.str(var);
    }
    std::ostringstream os;
    const bool wrap_num = num_.degree() > 0;
    if (wrap_num) os << "(";
    os << num_.str(var);
    if (wrap_num) os << ")";
    os << "/";
    const bool wrap_den = den_.degree() > 0;
    if (wrap_den) os << "(";
    os << den_.str(var);
    if (wrap_den) os << ")";
    return os.str();
}

Rational eval_at_delta_zero(const RatFunc& f) {
    return f.evaluate(Rational(0));
}

} // namespace mzv
