#include "sphopf/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphopf {

namespace {

void check_kind(const Label& lab, LabelKind expected, const char* where) {
    if (lab.kind != expected)
        throw std::invalid_argument(std::string(where) + ": label belongs to another species");
}

void check_block(const GroundSet& block, const char* where) {
    if (block.empty())
        throw std::invalid_argument(std::string(where) + ": labels live on nonempty blocks");
}

void check_sub(const GroundSet& block, const GroundSet& sub, const char* where) {
    if (sub.empty() || !sub.subset_of(block))
        throw std::invalid_argument(std::string(where) +
                                    ": restriction target must be a nonempty subset");
}

// positions of the atoms of sub within the sorted atom list of block
std::vector<int> sub_positions(const GroundSet& block, const GroundSet& sub) {
    std::vector<int> pos;
    pos.reserve(sub.size());
    for (Atom a : sub) pos.push_back(block.position_of(a));
    return pos;
}

class TrivialSpecies final : public LabelSpecies {
public:
    std::string name() const override { return "trivial"; }
    LabelKind kind() const override { return LabelKind::Trivial; }

    std::vector<Label> enumerate(const GroundSet& block) const override {
        check_block(block, "trivial");
        return {Label{LabelKind::Trivial, {}}};
    }

    BigInt count(int) const override { return 1; }

    Label restrict(const Label& lab, const GroundSet& block, const GroundSet& sub) const override {
        check_kind(lab, LabelKind::Trivial, "trivial");
        check_sub(block, sub, "trivial");
        return lab;
    }

    Label relabel(const Bijection& sigma, const Label& lab, const GroundSet& block) const override {
        check_kind(lab, LabelKind::Trivial, "trivial");
        if (sigma.domain() != block) throw std::invalid_argument("trivial: domain mismatch");
        return lab;
    }

    std::string encode(const Label&, const GroundSet&) const override { return "·"; }
};

std::string encode_indices(const std::vector<int>& v, std::size_t from = 0) {
    std::string s;
    for (std::size_t i = from; i < v.size(); ++i) {
        if (i > from) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// all tuples over {0..base-1} of the given length with a fixed prefix, in
// lexicographic order
void append_tuples(std::vector<Label>& out, LabelKind kind, std::vector<int>& prefix,
                   int length, int base) {
    if (static_cast<int>(prefix.size()) == length) {
        out.push_back(Label{kind, prefix});
        return;
    }
    for (int v = 0; v < base; ++v) {
        prefix.push_back(v);
        append_tuples(out, kind, prefix, length, base);
        prefix.pop_back();
    }
}

class MapSpecies final : public LabelSpecies {
public:
    explicit MapSpecies(FiniteGroup g) : group_(std::move(g)) {}

    std::string name() const override { return "map:" + group_.name(); }
    LabelKind kind() const override { return LabelKind::Map; }
    const FiniteGroup& group() const { return group_; }

    std::vector<Label> enumerate(const GroundSet& block) const override {
        check_block(block, "map");
        std::vector<Label> out;
        std::vector<int> prefix;
        append_tuples(out, LabelKind::Map, prefix, block.size(), group_.order());
        return out;
    }

    BigInt count(int block_size) const override {
        BigInt r = 1;
        for (int i = 0; i < block_size; ++i) r *= group_.order();
        return r;
    }

    Label restrict(const Label& lab, const GroundSet& block, const GroundSet& sub) const override {
        check_kind(lab, LabelKind::Map, "map");
        check_sub(block, sub, "map");
        std::vector<int> payload;
        payload.reserve(sub.size());
        for (int p : sub_positions(block, sub)) payload.push_back(lab.payload[p]);
        return Label{LabelKind::Map, std::move(payload)};
    }

    Label relabel(const Bijection& sigma, const Label& lab, const GroundSet& block) const override {
        check_kind(lab, LabelKind::Map, "map");
        if (sigma.domain() != block) throw std::invalid_argument("map: domain mismatch");
        // f -> f o sigma^{-1}
        const GroundSet& target = sigma.codomain();
        std::vector<int> payload(target.size());
        for (int i = 0; i < block.size(); ++i)
            payload[target.position_of(sigma(block.atoms()[i]))] = lab.payload[i];
        return Label{LabelKind::Map, std::move(payload)};
    }

    std::string encode(const Label& lab, const GroundSet&) const override {
        return encode_indices(lab.payload);
    }

private:
    FiniteGroup group_;
};

class OrbitSpecies final : public LabelSpecies {
public:
    explicit OrbitSpecies(FiniteGroup g) : group_(std::move(g)) {}

    std::string name() const override { return "orbit:" + group_.name(); }
    LabelKind kind() const override { return LabelKind::Orbit; }
    const FiniteGroup& group() const { return group_; }

    // Orbit of f under left translation, represented by the unique member
    // with f(min block) = identity.
    Label canonicalize(std::vector<int> values) const {
        const int t = group_.inv(values.front());
        for (int& v : values) v = group_.mul(t, v);
        return Label{LabelKind::Orbit, std::move(values)};
    }

    std::vector<Label> enumerate(const GroundSet& block) const override {
        check_block(block, "orbit");
        std::vector<Label> out;
        std::vector<int> prefix = {FiniteGroup::identity};
        append_tuples(out, LabelKind::Orbit, prefix, block.size(), group_.order());
        return out;
    }

    BigInt count(int block_size) const override {
        BigInt r = 1;
        for (int i = 0; i < block_size - 1; ++i) r *= group_.order();
        return r;
    }

    Label restrict(const Label& lab, const GroundSet& block, const GroundSet& sub) const override {
        check_kind(lab, LabelKind::Orbit, "orbit");
        check_sub(block, sub, "orbit");
        std::vector<int> values;
        values.reserve(sub.size());
        for (int p : sub_positions(block, sub)) values.push_back(lab.payload[p]);
        return canonicalize(std::move(values));
    }

    Label relabel(const Bijection& sigma, const Label& lab, const GroundSet& block) const override {
        check_kind(lab, LabelKind::Orbit, "orbit");
        if (sigma.domain() != block) throw std::invalid_argument("orbit: domain mismatch");
        const GroundSet& target = sigma.codomain();
        std::vector<int> values(target.size());
        for (int i = 0; i < block.size(); ++i)
            values[target.position_of(sigma(block.atoms()[i]))] = lab.payload[i];
        return canonicalize(std::move(values));
    }

    std::string encode(const Label& lab, const GroundSet&) const override {
        return encode_indices(lab.payload);
    }

private:
    FiniteGroup group_;
};

class CyclicSpecies final : public LabelSpecies {
public:
    std::string name() const override { return "cyclic"; }
    LabelKind kind() const override { return LabelKind::Cyclic; }

    std::vector<Label> enumerate(const GroundSet& block) const override {
        check_block(block, "cyclic");
        std::vector<int> rest(block.atoms().begin() + 1, block.atoms().end());
        std::vector<Label> out;
        do {
            std::vector<int> word = {block.min()};
            word.insert(word.end(), rest.begin(), rest.end());
            out.push_back(Label{LabelKind::Cyclic, std::move(word)});
        } while (std::next_permutation(rest.begin(), rest.end()));
        return out;
    }

    BigInt count(int block_size) const override { return factorial(block_size - 1); }

    static Label rotate_to_min(std::vector<int> word) {
        auto it = std::min_element(word.begin(), word.end());
        std::rotate(word.begin(), it, word.end());
        return Label{LabelKind::Cyclic, std::move(word)};
    }

    Label restrict(const Label& lab, const GroundSet& block, const GroundSet& sub) const override {
        check_kind(lab, LabelKind::Cyclic, "cyclic");
        check_sub(block, sub, "cyclic");
        // successor within the cycle
        const std::vector<int>& word = lab.payload;
        auto next = [&](Atom a) {
            auto it = std::find(word.begin(), word.end(), a);
            if (it == word.end()) throw std::logic_error("cyclic: atom missing from word");
            ++it;
            return it == word.end() ? word.front() : *it;
        };
        // induced cycle by first return
        std::vector<int> out;
        out.reserve(sub.size());
        Atom a = sub.min();
        for (int i = 0; i < sub.size(); ++i) {
            out.push_back(a);
            Atom b = next(a);
            while (!sub.contains(b)) b = next(b);
            a = b;
        }
        if (a != sub.min()) throw std::logic_error("cyclic: first-return walk did not close");
        return Label{LabelKind::Cyclic, std::move(out)};
    }

    Label relabel(const Bijection& sigma, const Label& lab, const GroundSet& block) const override {
        check_kind(lab, LabelKind::Cyclic, "cyclic");
        if (sigma.domain() != block) throw std::invalid_argument("cyclic: domain mismatch");
        std::vector<int> word;
        word.reserve(lab.payload.size());
        for (Atom a : lab.payload) word.push_back(sigma(a));
        return rotate_to_min(std::move(word));
    }

    std::string encode(const Label& lab, const GroundSet&) const override {
        std::string s = "(";
        for (std::size_t i = 0; i < lab.payload.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(lab.payload[i]);
        }
        return s + ")";
    }
};

class SumSpecies final : public LabelSpecies {
public:
    SumSpecies(LabelSpeciesPtr first, LabelSpeciesPtr second)
        : first_(std::move(first)), second_(std::move(second)) {
        if (!first_ || !second_) throw std::invalid_argument("connected_sum: null summand");
    }

    std::string name() const override {
        return "sum(" + first_->name() + "," + second_->name() + ")";
    }
    LabelKind kind() const override { return LabelKind::Sum; }
    LabelSpeciesPtr first() const { return first_; }
    LabelSpeciesPtr second() const { return second_; }

    static Label wrap(int branch, const Label& inner) {
        Label out{LabelKind::Sum, {branch}};
        out.payload.insert(out.payload.end(), inner.payload.begin(), inner.payload.end());
        return out;
    }

    std::pair<int, Label> unwrap(const Label& lab) const {
        check_kind(lab, LabelKind::Sum, "sum");
        if (lab.payload.empty()) throw std::invalid_argument("sum: empty payload");
        int branch = lab.payload.front();
        if (branch != 0 && branch != 1) throw std::invalid_argument("sum: bad branch tag");
        Label inner{branch == 0 ? first_->kind() : second_->kind(),
                    {lab.payload.begin() + 1, lab.payload.end()}};
        return {branch, std::move(inner)};
    }

    std::vector<Label> enumerate(const GroundSet& block) const override {
        check_block(block, "sum");
        std::vector<Label> out;
        for (const Label& l : first_->enumerate(block)) out.push_back(wrap(0, l));
        for (const Label& l : second_->enumerate(block)) out.push_back(wrap(1, l));
        return out;
    }

    BigInt count(int block_size) const override {
        return first_->count(block_size) + second_->count(block_size);
    }

    Label restrict(const Label& lab, const GroundSet& block, const GroundSet& sub) const override {
        auto [branch, inner] = unwrap(lab);
        const LabelSpecies& s = branch == 0 ? *first_ : *second_;
        return wrap(branch, s.restrict(inner, block, sub));
    }

    Label relabel(const Bijection& sigma, const Label& lab, const GroundSet& block) const override {
        auto [branch, inner] = unwrap(lab);
        const LabelSpecies& s = branch == 0 ? *first_ : *second_;
        return wrap(branch, s.relabel(sigma, inner, block));
    }

    std::string encode(const Label& lab, const GroundSet& block) const override {
        auto [branch, inner] = unwrap(lab);
        const LabelSpecies& s = branch == 0 ? *first_ : *second_;
        return (branch == 0 ? "a:" : "b:") + s.encode(inner, block);
    }

private:
    LabelSpeciesPtr first_;
    LabelSpeciesPtr second_;
};

}  // namespace

LabelSpeciesPtr trivial_labels() { return std::make_shared<TrivialSpecies>(); }

LabelSpeciesPtr map_labels(FiniteGroup g) { return std::make_shared<MapSpecies>(std::move(g)); }

LabelSpeciesPtr orbit_labels(FiniteGroup g) {
    return std::make_shared<OrbitSpecies>(std::move(g));
}

LabelSpeciesPtr cyclic_labels() { return std::make_shared<CyclicSpecies>(); }

LabelSpeciesPtr connected_sum(LabelSpeciesPtr first, LabelSpeciesPtr second) {
    return std::make_shared<SumSpecies>(std::move(first), std::move(second));
}

LabelSpeciesPtr parse_species(const std::string& selector, int default_group_order) {
    auto group_order = [&](const std::string& s, std::size_t prefix) {
        if (s.size() == prefix) return default_group_order;
        if (s[prefix] != ':') throw std::invalid_argument("unknown species selector: " + s);
        int n = std::stoi(s.substr(prefix + 1));
        if (n <= 0) throw std::invalid_argument("species group order must be positive");
        return n;
    };
    if (selector == "trivial") return trivial_labels();
    if (selector == "cyclic") return cyclic_labels();
    if (selector.rfind("map", 0) == 0)
        return map_labels(cyclic_group(group_order(selector, 3)));
    if (selector.rfind("orbit", 0) == 0)
        return orbit_labels(cyclic_group(group_order(selector, 5)));
    if (selector.rfind("signed-orbit", 0) == 0)
        return orbit_labels(make_signed_group(cyclic_group(group_order(selector, 12))));
    if (selector.rfind("sum:", 0) == 0) {
        std::string rest = selector.substr(4);
        auto plus = rest.find('+');
        if (plus == std::string::npos)
            throw std::invalid_argument("sum selector needs two summands: " + selector);
        return connected_sum(parse_species(rest.substr(0, plus), default_group_order),
                             parse_species(rest.substr(plus + 1), default_group_order));
    }
    throw std::invalid_argument("unknown species selector: " + selector);
}

const FiniteGroup& species_group(const LabelSpecies& species) {
    if (auto* m = dynamic_cast<const MapSpecies*>(&species)) return m->group();
    if (auto* o = dynamic_cast<const OrbitSpecies*>(&species)) return o->group();
    throw std::invalid_argument("species_group: species has no underlying group");
}

std::pair<LabelSpeciesPtr, LabelSpeciesPtr> species_summands(const LabelSpecies& species) {
    if (auto* s = dynamic_cast<const SumSpecies*>(&species)) return {s->first(), s->second()};
    throw std::invalid_argument("species_summands: not a connected sum");
}

}  // namespace sphopf
