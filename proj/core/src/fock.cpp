#include "sphopf/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphopf {

GradedElement GradedElement::one(Basis basis) {
    GradedElement e(basis);
    e.add_term(LabeledSetPartition{}, 1);
    return e;
}

GradedElement GradedElement::of(const LabeledSetPartition& x, Basis basis, Rational coeff) {
    GradedElement e(basis);
    e.add_term(x, coeff);
    return e;
}

void GradedElement::add_term(const LabeledSetPartition& x, const Rational& coeff) {
    if (x.ground() != GroundSet::interval(x.ground().size()))
        throw std::invalid_argument("GradedElement: index must live on {1..n}");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(x, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational GradedElement::coeff(const LabeledSetPartition& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::map<int, Element> GradedElement::by_degree() const {
    std::map<int, Element> out;
    for (const auto& [x, c] : terms_) {
        int n = x.ground().size();
        auto it = out.find(n);
        if (it == out.end())
            it = out.emplace(n, Element(GroundSet::interval(n), basis_)).first;
        it->second.add_term(x, c);
    }
    return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    if (basis_ != o.basis_)
        throw std::invalid_argument("GradedElement: mixed bases in addition");
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [x, v] : terms_) v *= c;
    return *this;
}

GradedElement GradedElement::operator-() const {
    GradedElement e = *this;
    for (auto& [x, v] : e.terms_) v = -v;
    return e;
}

void GradedTensor::add_term(const LabeledSetPartition& l, const LabeledSetPartition& r,
                            const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(std::make_pair(l, r), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

GradedHopfAlgebra::GradedHopfAlgebra(std::shared_ptr<const SpeciesHopfMonoid> monoid,
                                     Flavor flavor)
    : monoid_(std::move(monoid)), flavor_(flavor) {
    if (!monoid_) throw std::invalid_argument("GradedHopfAlgebra: null monoid");
}

LabeledSetPartition GradedHopfAlgebra::canonicalize_orbit(const LabeledSetPartition& x) const {
    const int n = x.ground().size();
    if (x.ground() != GroundSet::interval(n))
        throw std::invalid_argument("canonicalize_orbit: index must live on {1..n}");
    {
        std::lock_guard<std::mutex> lock(canon_mutex_);
        auto it = canon_cache_.find(x);
        if (it != canon_cache_.end()) return it->second;
    }
    const GroundSet ground = x.ground();
    std::vector<Atom> images = ground.atoms();
    LabeledSetPartition best = x;
    std::string best_key = monoid_->encode(x);
    do {
        LabeledSetPartition candidate =
            monoid_->relabel(Bijection(ground, ground, images), x);
        std::string key = monoid_->encode(candidate);
        if (key < best_key) {
            best = std::move(candidate);
            best_key = std::move(key);
        }
    } while (std::next_permutation(images.begin(), images.end()));
    std::lock_guard<std::mutex> lock(canon_mutex_);
    canon_cache_.emplace(x, best);
    return best;
}

bool GradedHopfAlgebra::is_canonical(const LabeledSetPartition& x) const {
    return canonicalize_orbit(x) == x;
}

std::vector<LabeledSetPartition> GradedHopfAlgebra::basis(int degree) const {
    std::vector<LabeledSetPartition> all =
        monoid_->enumerate_component(GroundSet::interval(degree));
    if (flavor_ == Flavor::Full) return all;
    std::vector<LabeledSetPartition> out;
    for (const auto& x : all)
        if (is_canonical(x)) out.push_back(x);
    return out;
}

BigInt GradedHopfAlgebra::dimension(int degree) const {
    return BigInt(basis(degree).size());
}

GradedElement GradedHopfAlgebra::canonicalized(const GradedElement& a) const {
    if (flavor_ == Flavor::Full) return a;
    GradedElement out(a.basis());
    for (const auto& [x, c] : a.terms()) out.add_term(canonicalize_orbit(x), c);
    return out;
}

GradedElement GradedHopfAlgebra::project(const GradedElement& full_element) const {
    if (flavor_ != Flavor::Coinvariant)
        throw std::invalid_argument("project: target algebra must be coinvariant-flavored");
    return canonicalized(full_element);
}

GradedElement GradedHopfAlgebra::product_natural(const GradedElement& a,
                                                 const GradedElement& b) const {
    GradedElement out(Basis::Natural);
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms()) {
            const int m = x.ground().size();
            const int n = y.ground().size();
            std::vector<Atom> shifted;
            shifted.reserve(n);
            for (int i = m + 1; i <= m + n; ++i) shifted.push_back(i);
            LabeledSetPartition ys = monoid_->relabel(
                Bijection(y.ground(), GroundSet(shifted), shifted), y);
            out.add_term(monoid_->merge(x, ys), cx * cy);
        }
    return canonicalized(out);
}

GradedTensor GradedHopfAlgebra::coproduct_natural(const GradedElement& a) const {
    GradedTensor out{Basis::Natural, {}};
    for (const auto& [x, c] : a.terms()) {
        for (const auto& [s, t] : ordered_decompositions(x.ground())) {
            auto [l, r] = monoid_->split(x, s, t);
            LabeledSetPartition ls = monoid_->relabel(
                Bijection::order_preserving(s, GroundSet::interval(s.size())), l);
            LabeledSetPartition rs = monoid_->relabel(
                Bijection::order_preserving(t, GroundSet::interval(t.size())), r);
            if (flavor_ == Flavor::Coinvariant) {
                ls = canonicalize_orbit(ls);
                rs = canonicalize_orbit(rs);
            }
            out.add_term(ls, rs, c);
        }
    }
    return out;
}

GradedElement GradedHopfAlgebra::convert(const GradedElement& a, Basis target) const {
    if (a.basis() == target) return a;
    GradedElement out(target);
    for (const auto& [n, piece] : a.by_degree()) {
        Element converted = monoid_->convert(piece, target);
        for (const auto& [x, c] : converted.terms()) out.add_term(x, c);
    }
    return canonicalized(out);
}

GradedElement GradedHopfAlgebra::product(const GradedElement& a, const GradedElement& b) const {
    if (a.basis() != b.basis())
        throw std::invalid_argument("product: operands in different bases");
    if (a.basis() == Basis::Natural) return product_natural(a, b);
    GradedElement pn = product_natural(convert(a, Basis::Natural), convert(b, Basis::Natural));
    return convert(pn, a.basis());
}

GradedTensor GradedHopfAlgebra::coproduct(const GradedElement& a) const {
    if (a.basis() == Basis::Natural) return coproduct_natural(a);
    GradedTensor tn = coproduct_natural(convert(a, Basis::Natural));
    GradedTensor out{a.basis(), {}};
    for (const auto& [pair, c] : tn.terms) {
        GradedElement left = convert(GradedElement::of(pair.first, Basis::Natural), a.basis());
        GradedElement right = convert(GradedElement::of(pair.second, Basis::Natural), a.basis());
        for (const auto& [u, cu] : left.terms())
            for (const auto& [v, cv] : right.terms()) out.add_term(u, v, c * cu * cv);
    }
    return out;
}

StructureTable GradedHopfAlgebra::product_table(Basis basis, int left_degree,
                                                int right_degree) const {
    StructureTable table;
    table.basis = basis;
    table.is_product = true;
    table.left_degree = left_degree;
    table.right_degree = right_degree;
    std::vector<LabeledSetPartition> lefts = this->basis(left_degree);
    std::vector<LabeledSetPartition> rights = this->basis(right_degree);
    table.singles = this->basis(left_degree + right_degree);
    std::map<LabeledSetPartition, int> col;
    for (std::size_t j = 0; j < table.singles.size(); ++j)
        col.emplace(table.singles[j], static_cast<int>(j));
    for (const auto& a : lefts)
        for (const auto& b : rights) {
            table.pairs.emplace_back(a, b);
            GradedElement p =
                product(GradedElement::of(a, basis), GradedElement::of(b, basis));
            std::vector<Rational> row(table.singles.size());
            for (const auto& [x, c] : p.terms()) {
                auto it = col.find(x);
                if (it == col.end())
                    throw std::logic_error("product_table: index outside target degree");
                row[it->second] = c;
            }
            table.cells.push_back(std::move(row));
        }
    return table;
}

StructureTable GradedHopfAlgebra::coproduct_table(Basis basis, int left_degree,
                                                  int right_degree) const {
    StructureTable table;
    table.basis = basis;
    table.is_product = false;
    table.left_degree = left_degree;
    table.right_degree = right_degree;
    std::vector<LabeledSetPartition> lefts = this->basis(left_degree);
    std::vector<LabeledSetPartition> rights = this->basis(right_degree);
    table.singles = this->basis(left_degree + right_degree);
    std::map<std::pair<LabeledSetPartition, LabeledSetPartition>, int> col;
    for (const auto& a : lefts)
        for (const auto& b : rights) {
            col.emplace(std::make_pair(a, b), static_cast<int>(table.pairs.size()));
            table.pairs.emplace_back(a, b);
        }
    for (const auto& x : table.singles) {
        GradedTensor t = coproduct(GradedElement::of(x, basis));
        std::vector<Rational> row(table.pairs.size());
        for (const auto& [pair, c] : t.terms) {
            if (pair.first.ground().size() != left_degree ||
                pair.second.ground().size() != right_degree)
                continue;
            row[col.at(pair)] += c;
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

}  // namespace sphopf
