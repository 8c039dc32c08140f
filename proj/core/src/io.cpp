#include "sphopf/io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace sphopf {

namespace {

using json = nlohmann::ordered_json;

json blocks_to_json(const SpeciesHopfMonoid& monoid, const LabeledSetPartition& x) {
    json blocks = json::array();
    for (const auto& [b, lab] : x.blocks()) {
        json jb;
        jb["atoms"] = b.atoms();
        jb["label"] = monoid.labels().encode(lab, b);
        blocks.push_back(std::move(jb));
    }
    return blocks;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

LabeledSetPartition parse_labeled(const SpeciesHopfMonoid& monoid, const std::string& text) {
    if (text == "{}" || text.empty()) return LabeledSetPartition{};
    std::vector<std::pair<GroundSet, Label>> blocks;
    std::vector<Atom> all;
    std::istringstream block_stream(text);
    std::string block_text;
    while (std::getline(block_stream, block_text, '|')) {
        auto eq = block_text.find('=');
        std::string atom_part = block_text.substr(0, eq);
        std::vector<Atom> atoms;
        std::istringstream atom_stream(atom_part);
        int a;
        while (atom_stream >> a) atoms.push_back(a);
        if (atoms.empty()) throw std::invalid_argument("parse_labeled: empty block in " + text);
        GroundSet block(atoms);
        all.insert(all.end(), atoms.begin(), atoms.end());
        Label lab;
        if (eq == std::string::npos) {
            if (monoid.labels().kind() != LabelKind::Trivial)
                throw std::invalid_argument("parse_labeled: block needs a label: " + block_text);
        } else {
            std::string label_text = block_text.substr(eq + 1);
            bool found = false;
            for (const Label& candidate : monoid.labels().enumerate(block))
                if (monoid.labels().encode(candidate, block) == label_text) {
                    lab = candidate;
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("parse_labeled: unknown label '" + label_text +
                                            "' on block " + block.encode());
        }
        blocks.emplace_back(std::move(block), std::move(lab));
    }
    return LabeledSetPartition(GroundSet(all), std::move(blocks));
}

std::string element_to_json(const SpeciesHopfMonoid& monoid, const Element& x) {
    json j;
    j["component"] = x.component().atoms();
    j["basis"] = to_string(x.basis());
    json terms = json::array();
    for (const auto& [t, c] : x.terms()) {
        json jt;
        jt["blocks"] = blocks_to_json(monoid, t);
        jt["coeff"] = c.str();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string tensor_to_json(const SpeciesHopfMonoid& monoid, const TensorElement& t) {
    json j;
    j["left_component"] = t.left_component.atoms();
    j["right_component"] = t.right_component.atoms();
    j["basis"] = to_string(t.basis);
    json terms = json::array();
    for (const auto& [pair, c] : t.terms) {
        json jt;
        jt["left"] = blocks_to_json(monoid, pair.first);
        jt["right"] = blocks_to_json(monoid, pair.second);
        jt["coeff"] = c.str();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string graded_element_to_json(const SpeciesHopfMonoid& monoid, const GradedElement& x) {
    json j;
    j["basis"] = to_string(x.basis());
    json terms = json::array();
    for (const auto& [t, c] : x.terms()) {
        json jt;
        jt["degree"] = t.ground().size();
        jt["blocks"] = blocks_to_json(monoid, t);
        jt["coeff"] = c.str();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string graded_tensor_to_json(const SpeciesHopfMonoid& monoid, const GradedTensor& t) {
    json j;
    j["basis"] = to_string(t.basis);
    json terms = json::array();
    for (const auto& [pair, c] : t.terms) {
        json jt;
        jt["left_degree"] = pair.first.ground().size();
        jt["left"] = blocks_to_json(monoid, pair.first);
        jt["right_degree"] = pair.second.ground().size();
        jt["right"] = blocks_to_json(monoid, pair.second);
        jt["coeff"] = c.str();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string class_function_to_json(const ClassFunction& f) {
    json j = json::array();
    for (const auto& [type, v] : f.values()) {
        json jt;
        jt["cycle_type"] = type.parts();
        jt["value"] = v.str();
        j.push_back(std::move(jt));
    }
    return j.dump(2);
}

std::string sym_element_to_json(const SymElement& s) {
    json j = json::array();
    for (const auto& [lambda, c] : s.terms) {
        json jt;
        jt["basis"] = to_string(s.basis);
        jt["partition"] = lambda.parts();
        jt["coeff"] = c.str();
        j.push_back(std::move(jt));
    }
    return j.dump(2);
}

std::string pretty(const WordPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        if (!(c == Rational(1))) os << c.str() << "*";
        if (w.empty()) os << "1";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ' ';
            os << 'x' << w[i];
        }
    }
    return os.str();
}

std::string pretty(const MonomialPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        if (!(c == Rational(1))) os << c.str() << "*";
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) os << ' ';
            any = true;
            os << 'x' << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
        if (!any) os << "1";
    }
    return os.str();
}

std::string word_polynomial_to_json(const WordPolynomial& f) {
    json j;
    j["alphabet"] = f.alphabet();
    json terms = json::array();
    for (const auto& [w, c] : f.terms()) {
        json jt;
        jt["word"] = w;
        jt["coeff"] = c.str();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string monomial_polynomial_to_json(const MonomialPolynomial& f) {
    json j;
    j["alphabet"] = f.alphabet();
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json jt;
        jt["exponents"] = e;
        jt["coeff"] = c.str();
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j.dump(2);
}

std::string structure_table_to_csv(const SpeciesHopfMonoid& monoid, const StructureTable& t) {
    std::ostringstream os;
    auto pair_key = [&](const std::pair<LabeledSetPartition, LabeledSetPartition>& p) {
        return monoid.encode(p.first) + " * " + monoid.encode(p.second);
    };
    if (t.is_product) {
        os << csv_escape("product[" + to_string(t.basis) + "]");
        for (const auto& s : t.singles) os << ',' << csv_escape(monoid.encode(s));
        os << '\n';
        for (std::size_t i = 0; i < t.pairs.size(); ++i) {
            os << csv_escape(pair_key(t.pairs[i]));
            for (const auto& cell : t.cells[i]) os << ',' << cell.str();
            os << '\n';
        }
    } else {
        os << csv_escape("coproduct[" + to_string(t.basis) + "]");
        for (const auto& p : t.pairs) os << ',' << csv_escape(pair_key(p));
        os << '\n';
        for (std::size_t i = 0; i < t.singles.size(); ++i) {
            os << csv_escape(monoid.encode(t.singles[i]));
            for (const auto& cell : t.cells[i]) os << ',' << cell.str();
            os << '\n';
        }
    }
    return os.str();
}

std::string poset_to_dot(const SpeciesHopfMonoid& monoid, const ComponentPoset& poset) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < poset.size(); ++i)
        os << "  \"" << monoid.encode(poset.element(i)) << "\";\n";
    for (const auto& [i, j] : poset.poset().cover_relations())
        os << "  \"" << monoid.encode(poset.element(i)) << "\" -> \""
           << monoid.encode(poset.element(j)) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string dimensions_to_csv(const std::vector<DimensionRow>& rows) {
    std::ostringstream os;
    os << "model,n,q,dimension\n";
    for (const auto& r : rows)
        os << r.model << ',' << r.n << ',' << r.q << ',' << r.dimension.str() << '\n';
    return os.str();
}

std::string report_to_text(const Report& report) {
    std::ostringstream os;
    os << report.title << '\n';
    for (const auto& c : report.checks)
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.identity
           << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    os << (report.ok() ? "all checks passed" : "failures detected") << '\n';
    return os.str();
}

}  // namespace sphopf
