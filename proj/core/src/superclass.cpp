#include "sphopf/superclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphopf {

namespace {

const FiniteGroup& orbit_group(const SpeciesHopfMonoid& monoid) {
    if (monoid.labels().kind() != LabelKind::Orbit)
        throw std::invalid_argument("superclass: orbit-labeled engine required");
    return species_group(monoid.labels());
}

struct SumParts {
    LabelSpeciesPtr signed_orbit;  // orbit labels over the signed group
    LabelSpeciesPtr plain_map;     // map labels over the base group
    const FiniteGroup* signed_group;
    const FiniteGroup* base_group;
};

SumParts sum_parts(const SpeciesHopfMonoid& monoid) {
    if (monoid.labels().kind() != LabelKind::Sum)
        throw std::invalid_argument("superclass: connected-sum engine required");
    auto [first, second] = species_summands(monoid.labels());
    if (first->kind() != LabelKind::Orbit || second->kind() != LabelKind::Map)
        throw std::invalid_argument(
            "superclass: expected the sum of signed orbit labels and map labels");
    SumParts parts{first, second, &species_group(*first), &species_group(*second)};
    if (parts.signed_group->order() != 2 * parts.base_group->order())
        throw std::invalid_argument(
            "superclass: orbit summand must use the signed double of the map group");
    return parts;
}

int sign_of(const FiniteGroup& signed_group, int element) {
    return element < signed_group.order() / 2 ? +1 : -1;
}

int base_part(const FiniteGroup& signed_group, int element) {
    return element % (signed_group.order() / 2);
}

}  // namespace

std::string ArcLabeledPartition::encode() const {
    std::string s = partition.encode();
    for (const auto& [arc, g] : arc_labels)
        s += ";" + std::to_string(arc.first) + "," + std::to_string(arc.second) + ":" +
             std::to_string(g);
    return s;
}

bool arcs_fully_labeled(const ArcLabeledPartition& a, int group_order) {
    auto arcs = a.partition.arcs();
    if (arcs.size() != a.arc_labels.size()) return false;
    for (const auto& arc : arcs) {
        auto it = a.arc_labels.find(arc);
        if (it == a.arc_labels.end()) return false;
        if (it->second < 0 || it->second >= group_order) return false;
    }
    return true;
}

bool is_symmetric_arc_partition(const ArcLabeledPartition& a) {
    const GroundSet& ground = a.partition.ground();
    if (ground != ground.negated()) return false;
    for (const GroundSet& b : a.partition.blocks()) {
        GroundSet mirror = b.negated();
        bool found = false;
        for (const GroundSet& c : a.partition.blocks())
            if (c == mirror) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    for (const auto& [arc, g] : a.arc_labels) {
        auto mirror = std::make_pair(-arc.second, -arc.first);
        auto it = a.arc_labels.find(mirror);
        if (it == a.arc_labels.end() || it->second != g) return false;
    }
    return true;
}

bool has_zero_sum_arc(const ArcLabeledPartition& a) {
    for (const auto& [arc, g] : a.arc_labels)
        if (arc.first + arc.second == 0) return true;
    return false;
}

ArcLabeledPartition phi(const SpeciesHopfMonoid& orbit_monoid, const LabeledSetPartition& x) {
    const FiniteGroup& g = orbit_group(orbit_monoid);
    ArcLabeledPartition out{x.shape(), {}};
    for (const auto& [b, lab] : x.blocks()) {
        const std::vector<int>& f = lab.payload;
        for (int i = 0; i + 1 < b.size(); ++i) {
            auto arc = std::make_pair(b.atoms()[i], b.atoms()[i + 1]);
            out.arc_labels.emplace(arc, g.mul(g.inv(f[i]), f[i + 1]));
        }
    }
    return out;
}

LabeledSetPartition phi_inverse(const SpeciesHopfMonoid& orbit_monoid,
                                const ArcLabeledPartition& a) {
    const FiniteGroup& g = orbit_group(orbit_monoid);
    std::vector<std::pair<GroundSet, Label>> blocks;
    for (const GroundSet& b : a.partition.blocks()) {
        std::vector<int> f(b.size());
        f[0] = FiniteGroup::identity;
        for (int i = 0; i + 1 < b.size(); ++i) {
            auto it = a.arc_labels.find({b.atoms()[i], b.atoms()[i + 1]});
            if (it == a.arc_labels.end())
                throw std::invalid_argument("phi_inverse: missing arc label");
            f[i + 1] = g.mul(f[i], it->second);
        }
        blocks.emplace_back(b, Label{LabelKind::Orbit, std::move(f)});
    }
    return LabeledSetPartition(a.partition.ground(), std::move(blocks));
}

ArcLabeledPartition phi_pm(const SpeciesHopfMonoid& sum_monoid, const LabeledSetPartition& x) {
    SumParts parts = sum_parts(sum_monoid);
    const FiniteGroup& sg = *parts.signed_group;

    std::vector<GroundSet> out_blocks;
    std::map<std::pair<Atom, Atom>, int> labels;
    for (const auto& [b, lab] : x.blocks()) {
        if (lab.payload.empty()) throw std::invalid_argument("phi_pm: malformed sum label");
        const int branch = lab.payload.front();
        const std::vector<int> f(lab.payload.begin() + 1, lab.payload.end());
        if (branch == 0) {
            // signed orbit block: the sign pattern of consecutive quotients
            // separates the mirrored block pair
            std::vector<int> eps(b.size());
            eps[0] = +1;
            for (int i = 0; i + 1 < b.size(); ++i) {
                int d = sg.mul(sg.inv(f[i]), f[i + 1]);
                eps[i + 1] = eps[i] * sign_of(sg, d);
            }
            std::vector<Atom> c_atoms;
            for (int i = 0; i < b.size(); ++i) c_atoms.push_back(eps[i] * b.atoms()[i]);
            GroundSet c(c_atoms);
            for (const GroundSet& half : {c, c.negated()}) {
                out_blocks.push_back(half);
                for (int i = 0; i + 1 < half.size(); ++i) {
                    Atom u = half.atoms()[i];
                    Atom v = half.atoms()[i + 1];
                    int i0 = std::min(std::abs(u), std::abs(v));
                    int j0 = std::max(std::abs(u), std::abs(v));
                    int d = sg.mul(sg.inv(f[b.position_of(i0)]), f[b.position_of(j0)]);
                    labels[{u, v}] = base_part(sg, d);
                }
            }
        } else {
            // plain map block: one self-mirrored block; arcs into a positive
            // endpoint carry the map value there, mirrored arcs copy it
            GroundSet d = b.negated().set_union(b);
            out_blocks.push_back(d);
            for (int i = 0; i + 1 < d.size(); ++i) {
                Atom u = d.atoms()[i];
                Atom v = d.atoms()[i + 1];
                labels[{u, v}] = v > 0 ? f[b.position_of(v)] : f[b.position_of(-u)];
            }
        }
    }
    GroundSet ground = x.ground().negated().set_union(x.ground());
    return ArcLabeledPartition{SetPartition(ground, std::move(out_blocks)), std::move(labels)};
}

LabeledSetPartition phi_pm_inverse(const SpeciesHopfMonoid& sum_monoid,
                                   const ArcLabeledPartition& a) {
    SumParts parts = sum_parts(sum_monoid);
    const FiniteGroup& sg = *parts.signed_group;
    const int base_order = parts.base_group->order();
    if (!is_symmetric_arc_partition(a))
        throw std::invalid_argument("phi_pm_inverse: partition is not symmetric");

    auto arc_label = [&](Atom u, Atom v) {
        auto it = a.arc_labels.find({u, v});
        if (it == a.arc_labels.end())
            throw std::invalid_argument("phi_pm_inverse: missing arc label");
        return it->second;
    };

    std::vector<std::pair<GroundSet, Label>> blocks;
    std::vector<GroundSet> done;
    for (const GroundSet& c : a.partition.blocks()) {
        if (std::find(done.begin(), done.end(), c) != done.end()) continue;
        GroundSet mirror = c.negated();
        if (mirror == c) {
            // self-mirrored block: a plain map block on the positive half
            std::vector<Atom> positive;
            for (Atom v : c)
                if (v > 0) positive.push_back(v);
            GroundSet b(positive);
            std::vector<int> f(b.size());
            for (int i = 0; i < b.size(); ++i) {
                Atom v = b.atoms()[i];
                Atom pred = c.atoms()[c.position_of(v) - 1];  // min of c is negative
                f[i] = arc_label(pred, v);
            }
            std::vector<int> payload = {1};
            payload.insert(payload.end(), f.begin(), f.end());
            blocks.emplace_back(b, Label{LabelKind::Sum, std::move(payload)});
            done.push_back(c);
        } else {
            done.push_back(c);
            done.push_back(mirror);
            std::vector<Atom> absolutes;
            for (Atom v : c) absolutes.push_back(std::abs(v));
            GroundSet b(absolutes);
            // orient so the block containing the positive minimum is used
            const GroundSet& oriented = c.contains(b.min()) ? c : mirror;
            // propagate the signed values along the arcs of the oriented block
            std::vector<int> f(b.size(), -1);
            f[0] = FiniteGroup::identity;  // value at min(b) is +identity
            bool progress = true;
            while (progress) {
                progress = false;
                for (int i = 0; i + 1 < oriented.size(); ++i) {
                    Atom u = oriented.atoms()[i];
                    Atom v = oriented.atoms()[i + 1];
                    int i0 = std::min(std::abs(u), std::abs(v));
                    int j0 = std::max(std::abs(u), std::abs(v));
                    int g = arc_label(u, v);
                    // signed difference from i0 to j0
                    int d = (u > 0) == (v > 0) ? g : g + base_order;
                    int pi = b.position_of(i0);
                    int pj = b.position_of(j0);
                    if (f[pi] >= 0 && f[pj] < 0) {
                        f[pj] = sg.mul(f[pi], d);
                        progress = true;
                    } else if (f[pj] >= 0 && f[pi] < 0) {
                        f[pi] = sg.mul(f[pj], sg.inv(d));
                        progress = true;
                    }
                }
            }
            for (int v : f)
                if (v < 0)
                    throw std::invalid_argument("phi_pm_inverse: arcs do not connect the block");
            std::vector<int> payload = {0};
            payload.insert(payload.end(), f.begin(), f.end());
            blocks.emplace_back(b, Label{LabelKind::Sum, std::move(payload)});
        }
    }
    std::vector<Atom> positive;
    for (Atom v : a.partition.ground())
        if (v > 0) positive.push_back(v);
    return LabeledSetPartition(GroundSet(positive), std::move(blocks));
}

ScModel parse_sc_model(const std::string& s) {
    if (s == "USL") return ScModel::USL;
    if (s == "UO") return ScModel::UO;
    if (s == "USp") return ScModel::USp;
    throw std::invalid_argument("unknown superclass model: " + s);
}

std::string to_string(ScModel m) {
    switch (m) {
        case ScModel::USL: return "USL";
        case ScModel::UO: return "UO";
        case ScModel::USp: return "USp";
    }
    throw std::logic_error("to_string(ScModel): bad value");
}

BigInt sc_dimension(ScModel model, int n, int q) {
    if (q < 2) throw std::invalid_argument("sc_dimension: q must be at least 2");
    if (model != ScModel::USL && q % 2 == 0)
        throw std::invalid_argument("sc_dimension: UO and USp require odd q");
    FiniteGroup g = cyclic_group(q - 1);
    LabelSpeciesPtr species;
    switch (model) {
        case ScModel::USL: species = orbit_labels(g); break;
        case ScModel::UO: species = orbit_labels(make_signed_group(g)); break;
        case ScModel::USp:
            species = connected_sum(orbit_labels(make_signed_group(g)), map_labels(g));
            break;
    }
    BigInt total = 0;
    for (const SetPartition& shape : enumerate_partitions(GroundSet::interval(n))) {
        BigInt ways = 1;
        for (const GroundSet& b : shape.blocks()) ways *= species->count(b.size());
        total += ways;
    }
    return total;
}

LabelPairing positional_pairing(const LabelSpecies& a, int n_max) {
    LabelPairing pairing;
    for (int m = 1; m <= n_max; ++m) {
        BigInt count = a.count(m);
        std::vector<int> ident(static_cast<std::size_t>(count));
        for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
        pairing.maps.push_back(std::move(ident));
    }
    return pairing;
}

LabeledSetPartition map_through_pairing(const SpeciesHopfMonoid& a, const SpeciesHopfMonoid& b,
                                        const LabelPairing& pairing,
                                        const LabeledSetPartition& x) {
    std::vector<std::pair<GroundSet, Label>> blocks;
    for (const auto& [block, lab] : x.blocks()) {
        const int m = block.size();
        if (m > static_cast<int>(pairing.maps.size()))
            throw std::invalid_argument("map_through_pairing: pairing too short");
        std::vector<Label> from = a.labels().enumerate(block);
        std::vector<Label> to = b.labels().enumerate(block);
        auto it = std::find(from.begin(), from.end(), lab);
        if (it == from.end())
            throw std::invalid_argument("map_through_pairing: label not found");
        const auto& table = pairing.maps[m - 1];
        if (table.size() != from.size() || from.size() != to.size())
            throw std::invalid_argument("map_through_pairing: size mismatch");
        blocks.emplace_back(block, to[table[it - from.begin()]]);
    }
    return LabeledSetPartition(x.ground(), std::move(blocks));
}

Report hopf_monoid_iso_test(const SpeciesHopfMonoid& a, const SpeciesHopfMonoid& b,
                            const LabelPairing& pairing, int n_max) {
    Report report{"induced bijection " + a.labels().name() + " -> " + b.labels().name(), {}};

    // size validation doubles as the negative control
    bool sizes_ok = static_cast<int>(pairing.maps.size()) >= n_max;
    for (int m = 1; m <= n_max && sizes_ok; ++m) {
        if (a.labels().count(m) != b.labels().count(m) ||
            BigInt(pairing.maps[m - 1].size()) != a.labels().count(m)) {
            sizes_ok = false;
            break;
        }
        std::vector<bool> hit(pairing.maps[m - 1].size(), false);
        for (int v : pairing.maps[m - 1]) {
            if (v < 0 || v >= static_cast<int>(hit.size()) || hit[v]) {
                sizes_ok = false;
                break;
            }
            hit[v] = true;
        }
    }
    report.record("pairing is a size-preserving bijection", sizes_ok,
                  sizes_ok ? "" : "label counts or index maps do not match");
    if (!sizes_ok) return report;

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

    auto themap = [&](const LabeledSetPartition& x) {
        return map_through_pairing(a, b, pairing, x);
    };

    for (int n = 0; n <= n_max; ++n) {
        GroundSet component = GroundSet::interval(n);
        std::vector<LabeledSetPartition> basis = a.enumerate_component(component);
        // products: merging commutes with the induced bijection
        for (const auto& [s, t] : ordered_decompositions(component))
            for (const auto& x : a.enumerate_component(s))
                for (const auto& y : a.enumerate_component(t))
                    expect(themap(a.merge(x, y)) == b.merge(themap(x), themap(y)),
                           "product intertwining fails at degree " + std::to_string(n));
        // p-basis coproducts: block-set splitting commutes with the bijection
        for (const auto& x : basis)
            for (const auto& [s, t] : ordered_decompositions(component)) {
                TensorElement lhs = a.structure_coproduct(Basis::P, x, s, t);
                TensorElement rhs = b.structure_coproduct(Basis::P, themap(x), s, t);
                TensorElement mapped{s, t, Basis::P, {}};
                for (const auto& [pair, c] : lhs.terms)
                    mapped.add_term(themap(pair.first), themap(pair.second), c);
                expect(mapped == rhs,
                       "coproduct intertwining fails at degree " + std::to_string(n));
            }
    }
    flush("induced bijection intertwines product and p-basis coproduct");
    return report;
}

}  // namespace sphopf
