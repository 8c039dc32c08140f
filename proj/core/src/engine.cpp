#include "sphopf/engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sphopf {

std::string to_string(Basis b) {
    switch (b) {
        case Basis::Natural: return "natural";
        case Basis::M: return "m";
        case Basis::P: return "p";
        case Basis::E: return "e";
        case Basis::H: return "h";
    }
    throw std::logic_error("to_string(Basis): bad value");
}

Basis parse_basis(const std::string& s) {
    if (s == "natural") return Basis::Natural;
    if (s == "m") return Basis::M;
    if (s == "p") return Basis::P;
    if (s == "e") return Basis::E;
    if (s == "h") return Basis::H;
    throw std::invalid_argument("unknown basis: " + s);
}

LabeledSetPartition::LabeledSetPartition(GroundSet ground,
                                         std::vector<std::pair<GroundSet, Label>> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
    std::vector<GroundSet> shape_blocks;
    shape_blocks.reserve(blocks_.size());
    for (const auto& [b, lab] : blocks_) shape_blocks.push_back(b);
    SetPartition shape(ground_, shape_blocks);  // validates the shape
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) {
        return a.first.min() < b.first.min();
    });
}

SetPartition LabeledSetPartition::shape() const {
    std::vector<GroundSet> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& [b, lab] : blocks_) blocks.push_back(b);
    return SetPartition(ground_, std::move(blocks));
}

Element Element::unit(Basis basis) {
    Element e{GroundSet{}, basis};
    e.add_term(LabeledSetPartition{}, 1);
    return e;
}

Element Element::of(const LabeledSetPartition& x, Basis basis, Rational coeff) {
    Element e{x.ground(), basis};
    e.add_term(x, coeff);
    return e;
}

void Element::add_term(const LabeledSetPartition& x, const Rational& coeff) {
    if (x.ground() != component_)
        throw std::invalid_argument("Element: term does not live on the component");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(x, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Element::coeff(const LabeledSetPartition& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Rational(0) : it->second;
}

Element& Element::operator+=(const Element& o) {
    if (component_ != o.component_ || basis_ != o.basis_)
        throw std::invalid_argument("Element: mixed components or bases in addition");
    for (const auto& [x, c] : o.terms_) add_term(x, c);
    return *this;
}

Element& Element::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [x, v] : terms_) v *= c;
    return *this;
}

Element Element::operator-() const {
    Element e = *this;
    for (auto& [x, v] : e.terms_) v = -v;
    return e;
}

void TensorElement::add_term(const LabeledSetPartition& l, const LabeledSetPartition& r,
                             const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto [it, inserted] = terms.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void MultiTensor::add_term(const std::vector<LabeledSetPartition>& factors, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(factors, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ComponentPoset::ComponentPoset(std::vector<LabeledSetPartition> elements,
                               std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), poset_(leq) {
    for (int i = 0; i < size(); ++i) index_.emplace(elements_[i], i);
    lower_.resize(size());
    upper_.resize(size());
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (poset_.leq(j, i)) {
                lower_[i].push_back(j);
                upper_[j].push_back(i);
            }
}

int ComponentPoset::index_of(const LabeledSetPartition& x) const {
    auto it = index_.find(x);
    if (it == index_.end())
        throw std::invalid_argument("ComponentPoset: partition not in component");
    return it->second;
}

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

void Report::record(const std::string& identity, bool passed, const std::string& detail) {
    checks.push_back({identity, passed, detail});
}

SpeciesHopfMonoid::SpeciesHopfMonoid(LabelSpeciesPtr labels, SizeGuard guard)
    : labels_(std::move(labels)), guard_(guard) {
    if (!labels_) throw std::invalid_argument("SpeciesHopfMonoid: null label species");
}

int SpeciesHopfMonoid::guard_limit() const {
    return labels_->kind() == LabelKind::Trivial ? guard_.trivial_max : guard_.general_max;
}

void SpeciesHopfMonoid::check_guard(const GroundSet& component) const {
    if (component.size() > guard_limit())
        throw GuardError("component of size " + std::to_string(component.size()) +
                         " exceeds the size guard (" + std::to_string(guard_limit()) + ")");
}

LabeledSetPartition SpeciesHopfMonoid::merge(const LabeledSetPartition& x,
                                             const LabeledSetPartition& y) const {
    if (!x.ground().disjoint_from(y.ground()))
        throw std::invalid_argument("merge: ground sets overlap");
    std::vector<std::pair<GroundSet, Label>> blocks = x.blocks();
    blocks.insert(blocks.end(), y.blocks().begin(), y.blocks().end());
    return LabeledSetPartition(x.ground().set_union(y.ground()), std::move(blocks));
}

LabeledSetPartition SpeciesHopfMonoid::restrict_to(const LabeledSetPartition& z,
                                                   const GroundSet& s) const {
    if (!s.subset_of(z.ground()))
        throw std::invalid_argument("restrict_to: not a subset of the component");
    std::vector<std::pair<GroundSet, Label>> blocks;
    for (const auto& [b, lab] : z.blocks()) {
        GroundSet piece = b.set_intersection(s);
        if (piece.empty()) continue;
        blocks.emplace_back(piece, labels_->restrict(lab, b, piece));
    }
    return LabeledSetPartition(s, std::move(blocks));
}

std::pair<LabeledSetPartition, LabeledSetPartition> SpeciesHopfMonoid::split(
    const LabeledSetPartition& z, const GroundSet& s, const GroundSet& t) const {
    if (!s.disjoint_from(t) || s.set_union(t) != z.ground())
        throw std::invalid_argument("split: sets do not decompose the component");
    return {restrict_to(z, s), restrict_to(z, t)};
}

LabeledSetPartition SpeciesHopfMonoid::relabel(const Bijection& sigma,
                                               const LabeledSetPartition& x) const {
    if (sigma.domain() != x.ground())
        throw std::invalid_argument("relabel: domain mismatch");
    std::vector<std::pair<GroundSet, Label>> blocks;
    blocks.reserve(x.blocks().size());
    for (const auto& [b, lab] : x.blocks()) {
        Bijection restricted(b, sigma.image(b), [&] {
            std::vector<Atom> images;
            images.reserve(b.size());
            for (Atom a : b) images.push_back(sigma(a));
            return images;
        }());
        blocks.emplace_back(sigma.image(b), labels_->relabel(restricted, lab, b));
    }
    return LabeledSetPartition(sigma.image(x.ground()), std::move(blocks));
}

std::string SpeciesHopfMonoid::encode(const LabeledSetPartition& x) const {
    if (x.empty()) return "{}";
    const bool trivial = labels_->kind() == LabelKind::Trivial;
    std::string s;
    for (std::size_t i = 0; i < x.blocks().size(); ++i) {
        const auto& [b, lab] = x.blocks()[i];
        if (i) s += '|';
        s += b.encode();
        if (!trivial) {
            s += '=';
            s += labels_->encode(lab, b);
        }
    }
    return s;
}

Element SpeciesHopfMonoid::nabla(const Element& x, const Element& y) const {
    if (!x.component().disjoint_from(y.component()))
        throw std::invalid_argument("nabla: components overlap");
    const Element& xn = x.basis() == Basis::Natural ? x : convert(x, Basis::Natural);
    const Element& yn = y.basis() == Basis::Natural ? y : convert(y, Basis::Natural);
    Element out{x.component().set_union(y.component()), Basis::Natural};
    for (const auto& [a, ca] : xn.terms())
        for (const auto& [b, cb] : yn.terms()) out.add_term(merge(a, b), ca * cb);
    return out;
}

TensorElement SpeciesHopfMonoid::delta(const Element& z, const GroundSet& s,
                                       const GroundSet& t) const {
    if (!s.disjoint_from(t) || s.set_union(t) != z.component())
        throw std::invalid_argument("delta: sets do not decompose the component");
    const Element& zn = z.basis() == Basis::Natural ? z : convert(z, Basis::Natural);
    TensorElement out{s, t, Basis::Natural, {}};
    for (const auto& [x, c] : zn.terms()) {
        auto [l, r] = split(x, s, t);
        out.add_term(l, r, c);
    }
    return out;
}

Element SpeciesHopfMonoid::nabla_multi(const std::vector<Element>& factors) const {
    Element acc = Element::unit();
    for (const Element& f : factors) acc = nabla(acc, f);
    return acc;
}

MultiTensor SpeciesHopfMonoid::delta_multi(const Element& z,
                                           const std::vector<GroundSet>& parts) const {
    GroundSet total;
    for (const GroundSet& p : parts) {
        if (!total.disjoint_from(p))
            throw std::invalid_argument("delta_multi: parts overlap");
        total = total.set_union(p);
    }
    if (total != z.component())
        throw std::invalid_argument("delta_multi: parts do not cover the component");
    const Element zn = z.basis() == Basis::Natural ? z : convert(z, Basis::Natural);

    MultiTensor out;
    out.components = parts;
    if (parts.empty()) {
        // the empty decomposition of the empty component: scalar terms
        for (const auto& [x, c] : zn.terms()) out.add_term({}, c);
        return out;
    }
    std::map<std::vector<LabeledSetPartition>, Rational> work;
    for (const auto& [x, c] : zn.terms()) work[{x}] = c;
    // peel parts off the front; the last factor carries the rest
    GroundSet rest = total;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        rest = rest.set_difference(parts[i]);
        std::map<std::vector<LabeledSetPartition>, Rational> next;
        for (const auto& [factors, c] : work) {
            auto [l, r] = split(factors.back(), parts[i], rest);
            std::vector<LabeledSetPartition> f(factors.begin(), factors.end() - 1);
            f.push_back(l);
            f.push_back(r);
            next[std::move(f)] += c;
        }
        work = std::move(next);
    }
    for (auto& [factors, c] : work) out.add_term(factors, c);
    return out;
}

bool SpeciesHopfMonoid::order_leq(const LabeledSetPartition& x,
                                  const LabeledSetPartition& y) const {
    if (x.ground() != y.ground())
        throw std::invalid_argument("order_leq: components differ");
    for (const auto& [a, alpha] : x.blocks()) {
        // the y-block that would contain a, if any
        const std::pair<GroundSet, Label>* host = nullptr;
        for (const auto& yb : y.blocks())
            if (yb.first.contains(a.min())) {
                host = &yb;
                break;
            }
        if (host == nullptr || !a.subset_of(host->first)) return false;
        if (labels_->restrict(host->second, host->first, a) != alpha) return false;
    }
    return true;
}

std::vector<LabeledSetPartition> SpeciesHopfMonoid::enumerate_component(
    const GroundSet& component) const {
    std::vector<LabeledSetPartition> out;
    for (const SetPartition& shape : enumerate_partitions(component)) {
        // labels per block, blocks in min order
        std::vector<std::vector<Label>> choices;
        choices.reserve(shape.block_count());
        for (const GroundSet& b : shape.blocks()) choices.push_back(labels_->enumerate(b));
        std::vector<std::pair<GroundSet, Label>> blocks;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == choices.size()) {
                out.emplace_back(component, blocks);
                return;
            }
            for (const Label& lab : choices[i]) {
                blocks.emplace_back(shape.blocks()[i], lab);
                rec(i + 1);
                blocks.pop_back();
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
        return encode(a) < encode(b);
    });
    return out;
}

std::shared_ptr<const ComponentPoset> SpeciesHopfMonoid::component_poset(
    const GroundSet& component) const {
    check_guard(component);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = poset_cache_.find(component);
    if (it != poset_cache_.end()) return it->second;

    std::vector<LabeledSetPartition> elements = enumerate_component(component);
    const int n = static_cast<int>(elements.size());
    std::vector<SetPartition> shapes;
    shapes.reserve(n);
    for (const auto& e : elements) shapes.push_back(e.shape());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                leq[i][j] = true;
                continue;
            }
            if (!refines(shapes[i], shapes[j])) continue;
            leq[i][j] = order_leq(elements[i], elements[j]);
        }
    auto cp = std::make_shared<const ComponentPoset>(std::move(elements), std::move(leq));
    poset_cache_.emplace(component, cp);
    return cp;
}

BigInt SpeciesHopfMonoid::mobius_closed_form(const LabeledSetPartition& x) const {
    BigInt value = 1;
    for (const auto& [b, lab] : x.blocks()) {
        value *= factorial(b.size() - 1);
        if ((b.size() - 1) % 2 != 0) value = -value;
    }
    return value;
}

LabeledSetPartition SpeciesHopfMonoid::minimum_below(const LabeledSetPartition& x) const {
    std::vector<std::pair<GroundSet, Label>> blocks;
    for (const auto& [b, lab] : x.blocks())
        for (Atom a : b) {
            GroundSet single({a});
            blocks.emplace_back(single, labels_->restrict(lab, b, single));
        }
    return LabeledSetPartition(x.ground(), std::move(blocks));
}

std::vector<Rational> SpeciesHopfMonoid::to_p_coords(const ComponentPoset& cp,
                                                     const Element& x) const {
    std::vector<Rational> p(cp.size());
    switch (x.basis()) {
        case Basis::P:
            for (const auto& [t, c] : x.terms()) p[cp.index_of(t)] += c;
            break;
        case Basis::Natural:
            // t = sum over t' <= t of p_{t'}
            for (const auto& [t, c] : x.terms())
                for (int i : cp.lower(cp.index_of(t))) p[i] += c;
            break;
        case Basis::M:
            // m_t = sum over t' >= t of mobius(t, t') p_{t'}
            for (const auto& [t, c] : x.terms()) {
                int j = cp.index_of(t);
                for (int i : cp.upper(j)) p[i] += Rational(cp.mobius(j, i)) * c;
            }
            break;
        case Basis::E:
        case Basis::H: {
            // e_t = sum over t' <= t of mobius(t') p_{t'}, h with |mobius|
            std::vector<Rational> s(cp.size());
            for (const auto& [t, c] : x.terms())
                for (int i : cp.lower(cp.index_of(t))) s[i] += c;
            for (int i = 0; i < cp.size(); ++i) {
                if (s[i].is_zero()) continue;
                BigInt mu = mobius_closed_form(cp.element(i));
                if (x.basis() == Basis::H && mu < 0) mu = -mu;
                p[i] = s[i] * Rational(mu);
            }
            break;
        }
    }
    return p;
}

Element SpeciesHopfMonoid::from_p_coords(const ComponentPoset& cp,
                                         const std::vector<Rational>& p, Basis target,
                                         const GroundSet& component) const {
    Element out{component, target};
    switch (target) {
        case Basis::P:
            for (int i = 0; i < cp.size(); ++i)
                if (!p[i].is_zero()) out.add_term(cp.element(i), p[i]);
            break;
        case Basis::Natural:
            // p_i = sum over j <= i of mobius(j, i) j
            for (int i = 0; i < cp.size(); ++i) {
                if (p[i].is_zero()) continue;
                for (int j : cp.lower(i))
                    out.add_term(cp.element(j), Rational(cp.mobius(j, i)) * p[i]);
            }
            break;
        case Basis::M:
            // p_j = sum over i >= j of m_i
            for (int j = 0; j < cp.size(); ++j) {
                if (p[j].is_zero()) continue;
                for (int i : cp.upper(j)) out.add_term(cp.element(i), p[j]);
            }
            break;
        case Basis::E:
        case Basis::H: {
            std::vector<Rational> q(cp.size());
            for (int i = 0; i < cp.size(); ++i) {
                if (p[i].is_zero()) continue;
                BigInt mu = mobius_closed_form(cp.element(i));
                if (target == Basis::H && mu < 0) mu = -mu;
                q[i] = p[i] / Rational(mu);
            }
            // invert the upper-sum transform: c_j = sum over i >= j mobius(j, i) q_i
            for (int i = 0; i < cp.size(); ++i) {
                if (q[i].is_zero()) continue;
                for (int j : cp.lower(i))
                    out.add_term(cp.element(j), Rational(cp.mobius(j, i)) * q[i]);
            }
            break;
        }
    }
    return out;
}

Element SpeciesHopfMonoid::convert(const Element& x, Basis target) const {
    if (x.basis() == target) return x;
    if (x.component().empty()) {
        // one-dimensional component: all bases coincide
        Element out{x.component(), target};
        for (const auto& [t, c] : x.terms()) out.add_term(t, c);
        return out;
    }
    auto cp = component_poset(x.component());
    return from_p_coords(*cp, to_p_coords(*cp, x), target, x.component());
}

Element SpeciesHopfMonoid::structure_product(Basis basis, const LabeledSetPartition& alpha,
                                             const LabeledSetPartition& beta) const {
    if (!alpha.ground().disjoint_from(beta.ground()))
        throw std::invalid_argument("structure_product: components overlap");
    GroundSet component = alpha.ground().set_union(beta.ground());
    Element out{component, basis};
    switch (basis) {
        case Basis::Natural:
        case Basis::P:
        case Basis::E:
        case Basis::H:
            // multiplicative on indices
            out.add_term(merge(alpha, beta), 1);
            break;
        case Basis::M: {
            // sum over gamma restricting to alpha and beta
            check_guard(component);
            for (const LabeledSetPartition& gamma : enumerate_component(component))
                if (restrict_to(gamma, alpha.ground()) == alpha &&
                    restrict_to(gamma, beta.ground()) == beta)
                    out.add_term(gamma, 1);
            break;
        }
    }
    return out;
}

TensorElement SpeciesHopfMonoid::structure_coproduct(Basis basis, const LabeledSetPartition& x,
                                                     const GroundSet& s,
                                                     const GroundSet& t) const {
    if (!s.disjoint_from(t) || s.set_union(t) != x.ground())
        throw std::invalid_argument("structure_coproduct: sets do not decompose the component");
    TensorElement out{s, t, basis, {}};
    switch (basis) {
        case Basis::Natural:
        case Basis::E:
        case Basis::H: {
            auto [l, r] = split(x, s, t);
            out.add_term(l, r, 1);
            break;
        }
        case Basis::M:
        case Basis::P: {
            // nonzero only on the image of the product: no block may be cut
            bool splits = true;
            for (const auto& [b, lab] : x.blocks())
                if (!b.subset_of(s) && !b.subset_of(t)) {
                    splits = false;
                    break;
                }
            if (splits) {
                auto [l, r] = split(x, s, t);
                out.add_term(l, r, 1);
            }
            break;
        }
    }
    return out;
}

LabeledSetPartition with_trivial_labels(const SetPartition& shape) {
    std::vector<std::pair<GroundSet, Label>> blocks;
    blocks.reserve(shape.block_count());
    for (const GroundSet& b : shape.blocks()) blocks.emplace_back(b, Label{});
    return LabeledSetPartition(shape.ground(), std::move(blocks));
}

std::vector<std::pair<GroundSet, GroundSet>> ordered_decompositions(const GroundSet& ground) {
    const auto& atoms = ground.atoms();
    const int n = ground.size();
    std::vector<std::pair<GroundSet, GroundSet>> out;
    out.reserve(std::size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Atom> s, t;
        for (int i = 0; i < n; ++i) ((mask >> i) & 1 ? s : t).push_back(atoms[i]);
        out.emplace_back(GroundSet(std::move(s)), GroundSet(std::move(t)));
    }
    return out;
}

Report SpeciesHopfMonoid::verify_hopf_axioms(const GroundSet& component) const {
    Report report{"hopf axioms on {" + component.encode() + "}, species " + labels_->name(), {}};

    std::map<GroundSet, std::vector<LabeledSetPartition>> basis_cache;
    auto basis_of = [&](const GroundSet& g) -> const std::vector<LabeledSetPartition>& {
        auto it = basis_cache.find(g);
        if (it == basis_cache.end())
            it = basis_cache.emplace(g, enumerate_component(g)).first;
        return it->second;
    };

    long checked = 0;
    std::string first_failure;
    auto expect = [&](bool cond, const std::string& what) {
        ++checked;
        if (!cond && first_failure.empty()) first_failure = what;
    };
    auto flush = [&](const std::string& identity) {
        report.record(identity, first_failure.empty(),
                      first_failure.empty() ? std::to_string(checked) + " instances"
                                            : first_failure);
        checked = 0;
        first_failure.clear();
    };

    // associativity and commutativity of the product
    const int n = component.size();
    const auto& atoms = component.atoms();
    long three_pow = 1;
    for (int i = 0; i < n; ++i) three_pow *= 3;
    for (long code = 0; code < three_pow; ++code) {
        long c = code;
        std::vector<Atom> ra, sa, ta;
        for (int i = 0; i < n; ++i, c /= 3) {
            int d = static_cast<int>(c % 3);
            (d == 0 ? ra : d == 1 ? sa : ta).push_back(atoms[i]);
        }
        GroundSet r{std::move(ra)}, s{std::move(sa)}, t{std::move(ta)};
        for (const auto& x : basis_of(r))
            for (const auto& y : basis_of(s)) {
                for (const auto& z : basis_of(t))
                    expect(merge(merge(x, y), z) == merge(x, merge(y, z)), "associativity");
                if (t.empty()) expect(merge(x, y) == merge(y, x), "commutativity");
            }
    }
    flush("product associative and commutative");

    // coassociativity and cocommutativity of the coproduct
    for (long code = 0; code < three_pow; ++code) {
        long c = code;
        std::vector<Atom> ra, sa, ta;
        for (int i = 0; i < n; ++i, c /= 3) {
            int d = static_cast<int>(c % 3);
            (d == 0 ? ra : d == 1 ? sa : ta).push_back(atoms[i]);
        }
        GroundSet r{std::move(ra)}, s{std::move(sa)}, t{std::move(ta)};
        GroundSet rs = r.set_union(s);
        for (const auto& z : basis_of(component)) {
            auto [left, rest] = split(z, rs, t);
            auto [l1, l2] = split(left, r, s);
            auto [head, right] = split(z, r, s.set_union(t));
            auto [r1, r2] = split(right, s, t);
            expect(l1 == head && l2 == r1 && rest == r2, "coassociativity");
            if (t.empty()) {
                auto [a, b] = split(z, r, s);
                auto [b2, a2] = split(z, s, r);
                expect(a == a2 && b == b2, "cocommutativity");
            }
        }
    }
    flush("coproduct coassociative and cocommutative");

    // unit and counit laws
    for (const auto& z : basis_of(component)) {
        expect(merge(LabeledSetPartition{}, z) == z && merge(z, LabeledSetPartition{}) == z,
               "unit law");
        auto [e1, z1] = split(z, GroundSet{}, component);
        auto [z2, e2] = split(z, component, GroundSet{});
        expect(e1 == LabeledSetPartition{} && z1 == z && z2 == z && e2 == LabeledSetPartition{},
               "counit law");
    }
    flush("unit and counit laws");

    // compatibility square: split after merge equals merge of split pieces,
    // and splitting along the merge decomposition recovers the factors
    auto decomps = ordered_decompositions(component);
    for (const auto& [r, rc] : decomps) {
        for (const auto& x : basis_of(r))
            for (const auto& y : basis_of(rc)) {
                LabeledSetPartition z = merge(x, y);
                auto [x2, y2] = split(z, r, rc);
                expect(x2 == x && y2 == y, "split after merge");
                for (const auto& [s, sc] : decomps) {
                    auto [zs, zsc] = split(z, s, sc);
                    GroundSet a = r.set_intersection(s);
                    GroundSet b = r.set_intersection(sc);
                    GroundSet a2 = rc.set_intersection(s);
                    GroundSet b2 = rc.set_intersection(sc);
                    auto [xa, xb] = split(x, a, b);
                    auto [ya, yb] = split(y, a2, b2);
                    expect(zs == merge(xa, ya) && zsc == merge(xb, yb), "compatibility");
                }
            }
    }
    flush("hopf compatibility and split-after-merge");

    return report;
}

}  // namespace sphopf
