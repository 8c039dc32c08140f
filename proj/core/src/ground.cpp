#include "sphopf/ground.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphopf {

GroundSet::GroundSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i] == 0) throw std::invalid_argument("GroundSet: atom 0 is not allowed");
        if (i > 0 && atoms_[i] == atoms_[i - 1])
            throw std::invalid_argument("GroundSet: duplicate atom");
    }
}

GroundSet GroundSet::interval(int n) {
    std::vector<Atom> a;
    a.reserve(n);
    for (int i = 1; i <= n; ++i) a.push_back(i);
    return GroundSet(std::move(a));
}

GroundSet GroundSet::mirrored_interval(int n) {
    std::vector<Atom> a;
    a.reserve(2 * n);
    for (int i = -n; i <= -1; ++i) a.push_back(i);
    for (int i = 1; i <= n; ++i) a.push_back(i);
    return GroundSet(std::move(a));
}

Atom GroundSet::min() const {
    if (empty()) throw std::invalid_argument("GroundSet::min: empty set");
    return atoms_.front();
}

bool GroundSet::contains(Atom a) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

int GroundSet::position_of(Atom a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it == atoms_.end() || *it != a)
        throw std::invalid_argument("GroundSet::position_of: atom not present");
    return static_cast<int>(it - atoms_.begin());
}

bool GroundSet::disjoint_from(const GroundSet& o) const {
    return set_intersection(o).empty();
}

bool GroundSet::subset_of(const GroundSet& o) const {
    return std::includes(o.atoms_.begin(), o.atoms_.end(), atoms_.begin(), atoms_.end());
}

GroundSet GroundSet::set_union(const GroundSet& o) const {
    std::vector<Atom> out;
    std::set_union(atoms_.begin(), atoms_.end(), o.atoms_.begin(), o.atoms_.end(),
                   std::back_inserter(out));
    GroundSet g;
    g.atoms_ = std::move(out);  // already sorted and unique
    return g;
}

GroundSet GroundSet::set_intersection(const GroundSet& o) const {
    std::vector<Atom> out;
    std::set_intersection(atoms_.begin(), atoms_.end(), o.atoms_.begin(), o.atoms_.end(),
                          std::back_inserter(out));
    GroundSet g;
    g.atoms_ = std::move(out);
    return g;
}

GroundSet GroundSet::set_difference(const GroundSet& o) const {
    std::vector<Atom> out;
    std::set_difference(atoms_.begin(), atoms_.end(), o.atoms_.begin(), o.atoms_.end(),
                        std::back_inserter(out));
    GroundSet g;
    g.atoms_ = std::move(out);
    return g;
}

GroundSet GroundSet::negated() const {
    std::vector<Atom> out(atoms_.rbegin(), atoms_.rend());
    for (Atom& a : out) a = -a;
    GroundSet g;
    g.atoms_ = std::move(out);
    return g;
}

std::string GroundSet::encode() const {
    std::string s;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(atoms_[i]);
    }
    return s;
}

Bijection::Bijection(GroundSet domain, GroundSet codomain, std::vector<Atom> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.size())
        throw std::invalid_argument("Bijection: image list does not match domain");
    if (domain_.size() != codomain_.size())
        throw std::invalid_argument("Bijection: domain and codomain sizes differ");
    std::vector<bool> seen(codomain_.size(), false);
    for (Atom b : images_) {
        int pos = codomain_.position_of(b);  // throws if not in codomain
        if (seen[pos]) throw std::invalid_argument("Bijection: image repeated");
        seen[pos] = true;
    }
}

Bijection Bijection::identity(const GroundSet& s) {
    return Bijection(s, s, s.atoms());
}

Bijection Bijection::order_preserving(const GroundSet& from, const GroundSet& to) {
    return Bijection(from, to, to.atoms());
}

Atom Bijection::operator()(Atom a) const {
    return images_[domain_.position_of(a)];
}

GroundSet Bijection::image(const GroundSet& subset) const {
    std::vector<Atom> out;
    out.reserve(subset.size());
    for (Atom a : subset) out.push_back((*this)(a));
    return GroundSet(std::move(out));
}

Bijection Bijection::inverse() const {
    std::vector<Atom> images(codomain_.size());
    for (int i = 0; i < domain_.size(); ++i)
        images[codomain_.position_of(images_[i])] = domain_.atoms()[i];
    return Bijection(codomain_, domain_, std::move(images));
}

Bijection Bijection::compose(const Bijection& inner) const {
    if (inner.codomain_ != domain_)
        throw std::invalid_argument("Bijection::compose: domains do not chain");
    std::vector<Atom> images;
    images.reserve(inner.domain_.size());
    for (Atom a : inner.domain_) images.push_back((*this)(inner(a)));
    return Bijection(inner.domain_, codomain_, std::move(images));
}

}  // namespace sphopf
