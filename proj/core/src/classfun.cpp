#include "sphopf/classfun.hpp"

#include "sphopf/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphopf {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::invalid_argument("Permutation: point out of range");
    return images_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> im(degree());
    for (int i = 1; i <= degree(); ++i) im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (inner.degree() != degree())
        throw std::invalid_argument("Permutation::compose: degree mismatch");
    std::vector<int> im(degree());
    for (int i = 1; i <= degree(); ++i) im[i - 1] = (*this)(inner(i));
    return Permutation(std::move(im));
}

Permutation Permutation::conjugated_by(const Permutation& tau) const {
    return tau.compose(*this).compose(tau.inverse());
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree() + 1, false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        int j = i;
        do {
            cycle.push_back(j);
            seen[j] = true;
            j = (*this)(j);
        } while (j != i);
        out.push_back(std::move(cycle));
    }
    return out;
}

IntegerPartition Permutation::cycle_type() const {
    std::vector<int> parts;
    for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
    return IntegerPartition(std::move(parts));
}

Permutation Permutation::embed_product(const Permutation& a, const Permutation& b) {
    std::vector<int> im;
    im.reserve(a.degree() + b.degree());
    for (int v : a.images()) im.push_back(v);
    for (int v : b.images()) im.push_back(v + a.degree());
    return Permutation(std::move(im));
}

bool Permutation::stabilizes_prefix(int m) const {
    for (int i = 1; i <= m; ++i)
        if ((*this)(i) > m) return false;
    return true;
}

std::pair<Permutation, Permutation> Permutation::split_prefix(int m) const {
    if (!stabilizes_prefix(m))
        throw std::invalid_argument("Permutation::split_prefix: prefix not stable");
    std::vector<int> a(images_.begin(), images_.begin() + m);
    std::vector<int> b(images_.begin() + m, images_.end());
    for (int& v : b) v -= m;
    return {Permutation(std::move(a)), Permutation(std::move(b))};
}

long long Permutation::lex_rank() const {
    const int n = degree();
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += images_[j] < images_[i] ? 1 : 0;
        long long f = 1;
        for (int m = 2; m <= n - 1 - i; ++m) f *= m;
        rank += smaller * f;
    }
    return rank;
}

GroupFunction::GroupFunction(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("GroupFunction: negative degree");
    long long size = 1;
    for (int i = 2; i <= degree; ++i) size *= i;
    values_.assign(size, Rational(0));
}

GroupFunction GroupFunction::indicator(const Permutation& sigma) {
    GroupFunction f(sigma.degree());
    f.set_value(sigma, 1);
    return f;
}

GroupFunction GroupFunction::class_indicator(int degree, const IntegerPartition& type) {
    GroupFunction f(degree);
    for (const Permutation& sigma : Permutation::all(degree))
        if (sigma.cycle_type() == type) f.set_value(sigma, 1);
    return f;
}

GroupFunction GroupFunction::trivial_character(int degree) {
    GroupFunction f(degree);
    for (auto& v : f.values_) v = 1;
    return f;
}

GroupFunction GroupFunction::sign_character(int degree) {
    GroupFunction f(degree);
    for (const Permutation& sigma : Permutation::all(degree))
        f.set_value(sigma, partition_stats(sigma.cycle_type()).sign);
    return f;
}

const Rational& GroupFunction::value(const Permutation& sigma) const {
    if (sigma.degree() != degree_)
        throw std::invalid_argument("GroupFunction: degree mismatch");
    return values_[sigma.lex_rank()];
}

void GroupFunction::set_value(const Permutation& sigma, const Rational& v) {
    if (sigma.degree() != degree_)
        throw std::invalid_argument("GroupFunction: degree mismatch");
    values_[sigma.lex_rank()] = v;
}

void GroupFunction::add_value(const Permutation& sigma, const Rational& v) {
    if (sigma.degree() != degree_)
        throw std::invalid_argument("GroupFunction: degree mismatch");
    values_[sigma.lex_rank()] += v;
}

bool GroupFunction::is_class_function() const {
    std::map<IntegerPartition, Rational> seen;
    for (const Permutation& sigma : Permutation::all(degree_)) {
        auto [it, inserted] = seen.emplace(sigma.cycle_type(), value(sigma));
        if (!inserted && it->second != value(sigma)) return false;
    }
    return true;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("GroupFunction: degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

GroupFunction& GroupFunction::operator*=(const Rational& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

ClassFunction ClassFunction::indicator(int degree, const IntegerPartition& type) {
    if (type.weight() != degree)
        throw std::invalid_argument("ClassFunction: type weight must equal the degree");
    ClassFunction f(degree);
    f.add_value(type, 1);
    return f;
}

ClassFunction ClassFunction::from_function(const GroupFunction& f) {
    if (!f.is_class_function())
        throw std::invalid_argument("ClassFunction: function is not constant on classes");
    ClassFunction out(f.degree());
    for (const IntegerPartition& type : integer_partitions(f.degree())) {
        // value at one representative with the standard cycle layout
        std::vector<int> im;
        int next = 1;
        for (int part : type.parts()) {
            for (int i = 0; i < part; ++i) im.push_back(next + (i + 1) % part);
            next += part;
        }
        out.add_value(type, f.value(Permutation(im)));
    }
    return out;
}

Rational ClassFunction::value(const IntegerPartition& type) const {
    auto it = values_.find(type);
    return it == values_.end() ? Rational(0) : it->second;
}

void ClassFunction::add_value(const IntegerPartition& type, const Rational& v) {
    if (type.weight() != degree_)
        throw std::invalid_argument("ClassFunction: type weight must equal the degree");
    if (v.is_zero()) return;
    auto [it, inserted] = values_.emplace(type, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) values_.erase(it);
    }
}

GroupFunction ClassFunction::densify() const {
    GroupFunction f(degree_);
    for (const Permutation& sigma : Permutation::all(degree_))
        f.set_value(sigma, value(sigma.cycle_type()));
    return f;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("ClassFunction: degree mismatch");
    for (const auto& [t, v] : o.values_) add_value(t, v);
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& c) {
    if (c.is_zero()) {
        values_.clear();
        return *this;
    }
    for (auto& [t, v] : values_) v *= c;
    return *this;
}

GroupFunction fun_product(const GroupFunction& f, const GroupFunction& g) {
    const int m = f.degree();
    const int n = g.degree();
    GroupFunction out(m + n);
    for (const Permutation& a : Permutation::all(m))
        for (const Permutation& b : Permutation::all(n))
            out.set_value(Permutation::embed_product(a, b), f.value(a) * g.value(b));
    return out;
}

std::vector<FunTensor> fun_coproduct(const GroupFunction& f) {
    const int n = f.degree();
    std::vector<FunTensor> out;
    for (int j = 0; j <= n; ++j) out.push_back(FunTensor{j, n - j, {}});
    // one restriction per ordered pair of complementary subsets, each embedded
    // along its order-preserving parametrization
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s, t;
        for (int i = 1; i <= n; ++i) ((mask >> (i - 1)) & 1 ? s : t).push_back(i);
        const int j = static_cast<int>(s.size());
        FunTensor& target = out[j];
        for (const Permutation& a : Permutation::all(j))
            for (const Permutation& b : Permutation::all(n - j)) {
                std::vector<int> images(n);
                for (int i = 0; i < j; ++i) images[s[i] - 1] = s[a(i + 1) - 1];
                for (int i = 0; i < n - j; ++i) images[t[i] - 1] = t[b(i + 1) - 1];
                Rational v = f.value(Permutation(images));
                if (v.is_zero()) continue;
                auto key = std::make_pair(a, b);
                auto [it, inserted] = target.terms.emplace(key, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second.is_zero()) target.terms.erase(it);
                }
            }
    }
    return out;
}

GroupFunction average_conjugation(const GroupFunction& f) {
    const int n = f.degree();
    GroupFunction out(n);
    for (const Permutation& x : Permutation::all(n)) {
        Rational sum = 0;
        for (const Permutation& sigma : Permutation::all(n))
            sum += f.value(x.conjugated_by(sigma));
        out.set_value(x, sum);
    }
    return out;
}

GroupFunction induce_product(const GroupFunction& f, const GroupFunction& g) {
    const int m = f.degree();
    const int n = g.degree();
    GroupFunction out(m + n);
    const Rational subgroup_order(factorial(m) * factorial(n));
    // the induced function is a class function, so evaluate once per type
    std::vector<Permutation> all = Permutation::all(m + n);
    std::map<IntegerPartition, Rational> per_type;
    for (const Permutation& x : all) {
        IntegerPartition type = x.cycle_type();
        if (per_type.count(type)) continue;
        Rational sum = 0;
        for (const Permutation& tau : all) {
            Permutation y = x.conjugated_by(tau);
            if (!y.stabilizes_prefix(m)) continue;
            auto [a, b] = y.split_prefix(m);
            sum += f.value(a) * g.value(b);
        }
        per_type.emplace(std::move(type), sum / subgroup_order);
    }
    for (const Permutation& x : all) out.set_value(x, per_type.at(x.cycle_type()));
    return out;
}

ClassFunction induce_class(const ClassFunction& f, const ClassFunction& g) {
    return ClassFunction::from_function(induce_product(f.densify(), g.densify()));
}

std::vector<ClassTensor> class_coproduct(const ClassFunction& f) {
    const int n = f.degree();
    std::vector<ClassTensor> out;
    for (int j = 0; j <= n; ++j) {
        ClassTensor t{j, n - j, {}};
        for (const IntegerPartition& alpha : integer_partitions(j))
            for (const IntegerPartition& beta : integer_partitions(n - j)) {
                Rational v = f.value(alpha.merged_with(beta));
                if (!v.is_zero()) t.terms.emplace(std::make_pair(alpha, beta), v);
            }
        out.push_back(std::move(t));
    }
    return out;
}

ClassFunction induced_young_character(const IntegerPartition& lambda, bool sign) {
    ClassFunction acc(0);
    acc.add_value(IntegerPartition{}, 1);
    for (int part : lambda.parts()) {
        GroupFunction chi =
            sign ? GroupFunction::sign_character(part) : GroupFunction::trivial_character(part);
        acc = induce_class(acc, ClassFunction::from_function(chi));
    }
    return acc;
}

LabeledSetPartition permutation_to_labeled(const Permutation& sigma) {
    std::vector<std::pair<GroundSet, Label>> blocks;
    for (const auto& cycle : sigma.cycles()) {
        GroundSet block(std::vector<Atom>(cycle.begin(), cycle.end()));
        blocks.emplace_back(block, Label{LabelKind::Cyclic, cycle});
    }
    return LabeledSetPartition(GroundSet::interval(sigma.degree()), std::move(blocks));
}

Permutation labeled_to_permutation(const LabeledSetPartition& x) {
    const int n = x.ground().size();
    if (x.ground() != GroundSet::interval(n))
        throw std::invalid_argument("labeled_to_permutation: index must live on {1..n}");
    std::vector<int> im(n, 0);
    for (const auto& [b, lab] : x.blocks()) {
        if (lab.kind != LabelKind::Cyclic)
            throw std::invalid_argument("labeled_to_permutation: cyclic labels required");
        const std::vector<int>& word = lab.payload;
        for (std::size_t i = 0; i < word.size(); ++i)
            im[word[i] - 1] = word[(i + 1) % word.size()];
    }
    return Permutation(std::move(im));
}

std::map<int, GroupFunction> iso_f(const GradedHopfAlgebra& alg, const GradedElement& a) {
    if (alg.flavor() != GradedHopfAlgebra::Flavor::Full)
        throw std::invalid_argument("iso_f: full-flavor algebra required");
    GradedElement p = alg.convert(a, Basis::P);
    std::map<int, GroupFunction> out;
    for (const auto& [n, piece] : p.by_degree()) {
        GroupFunction f(n);
        for (const auto& [x, c] : piece.terms()) f.add_value(labeled_to_permutation(x), c);
        out.emplace(n, std::move(f));
    }
    return out;
}

std::map<int, ClassFunction> iso_fbar(const GradedHopfAlgebra& alg, const GradedElement& a) {
    if (alg.flavor() != GradedHopfAlgebra::Flavor::Coinvariant)
        throw std::invalid_argument("iso_fbar: coinvariant-flavor algebra required");
    GradedElement p = alg.convert(a, Basis::P);
    std::map<int, ClassFunction> out;
    for (const auto& [n, piece] : p.by_degree()) {
        ClassFunction f(n);
        for (const auto& [x, c] : piece.terms()) {
            IntegerPartition type = labeled_to_permutation(x).cycle_type();
            f.add_value(type, c * Rational(partition_stats(type).centralizer_order));
        }
        out.emplace(n, std::move(f));
    }
    return out;
}

namespace {

// a fixed permutation with the prescribed cycle type
Permutation type_representative(const IntegerPartition& type) {
    std::vector<int> im;
    int next = 1;
    for (int part : type.parts()) {
        for (int i = 0; i < part; ++i) im.push_back(next + (i + 1) % part);
        next += part;
    }
    return Permutation(std::move(im));
}

// The terminal morphism pushed through a Fock functor: acts degreewise on
// p-basis elements over the cyclic species and lands in the p-basis over
// trivial labels (with orbit canonicalization at the coinvariant level).
GradedElement graded_psi(const Character& zeta_perm, const GradedHopfAlgebra& pi_alg,
                         const GradedElement& a) {
    const SpeciesHopfMonoid& pi = pi_alg.monoid();
    GradedElement out(Basis::P);
    for (const auto& [n, piece] : a.by_degree()) {
        Element image = terminal_psi(zeta_perm, pi, piece);
        Element image_p = pi.convert(image, Basis::P);
        for (const auto& [x, c] : image_p.terms()) out.add_term(x, c);
    }
    return pi_alg.flavor() == GradedHopfAlgebra::Flavor::Coinvariant ? pi_alg.project(out)
                                                                     : out;
}

}  // namespace

SymElement frobenius(const ClassFunction& f) {
    // the composite through the permutation model: class indicators lift to
    // orbit p-indices, the terminal morphism carries them to set-partition
    // orbit p-indices, and those are read off as power sums by type
    auto perm_monoid = std::make_shared<SpeciesHopfMonoid>(cyclic_labels());
    auto pi_monoid = std::make_shared<SpeciesHopfMonoid>(trivial_labels());
    GradedHopfAlgebra pi_coinv(pi_monoid, GradedHopfAlgebra::Flavor::Coinvariant);
    GradedHopfAlgebra perm_coinv(perm_monoid, GradedHopfAlgebra::Flavor::Coinvariant);
    Character zeta_perm = unit_character(perm_monoid);

    GradedElement lifted(Basis::P);
    for (const auto& [type, v] : f.values()) {
        LabeledSetPartition rep =
            perm_coinv.canonicalize_orbit(permutation_to_labeled(type_representative(type)));
        lifted.add_term(rep, v / Rational(partition_stats(type).centralizer_order));
    }
    GradedElement image = graded_psi(zeta_perm, pi_coinv, lifted);
    SymElement out{Basis::P, {}};
    for (const auto& [x, c] : image.terms()) out.add_term(partition_type(x.shape()), c);
    return out;
}

ClassFunction frobenius_inverse(const SymElement& s) {
    SymElement p = sym_convert(s, Basis::P);
    int degree = 0;
    for (const auto& [lambda, c] : p.terms) {
        if (degree == 0)
            degree = lambda.weight();
        else if (lambda.weight() != degree)
            throw std::invalid_argument("frobenius_inverse: mixed degrees");
    }
    ClassFunction out(degree);
    for (const auto& [lambda, c] : p.terms)
        out.add_value(lambda, c * Rational(partition_stats(lambda).centralizer_order));
    return out;
}

GradedElement lift_rho_tilde(const SymElement& s) {
    SymElement sp = sym_convert(s, Basis::P);
    auto perm_monoid = std::make_shared<SpeciesHopfMonoid>(cyclic_labels());
    auto pi_monoid = std::make_shared<SpeciesHopfMonoid>(trivial_labels());
    GradedHopfAlgebra pi_full(pi_monoid, GradedHopfAlgebra::Flavor::Full);
    Character zeta_perm = unit_character(perm_monoid);

    // power sum -> centralizer multiple of the class indicator -> inclusion
    // into all functions -> point indicators become permutation p-indices ->
    // terminal morphism into the set-partition model
    GradedElement lifted(Basis::P);
    for (const auto& [lambda, c] : sp.terms) {
        const int n = lambda.weight();
        const Rational z(partition_stats(lambda).centralizer_order);
        for (const Permutation& sigma : Permutation::all(n)) {
            if (sigma.cycle_type() != lambda) continue;
            lifted.add_term(permutation_to_labeled(sigma), c * z);
        }
    }
    return graded_psi(zeta_perm, pi_full, lifted);
}

}  // namespace sphopf
