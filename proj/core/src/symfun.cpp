#include "sphopf/symfun.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sphopf {

void WordPolynomial::add_term(const Word& w, const Rational& c) {
    for (int letter : w)
        if (letter < 1 || letter > alphabet_)
            throw std::invalid_argument("WordPolynomial: letter outside alphabet");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& o) {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("WordPolynomial: alphabet mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

WordPolynomial& WordPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

WordPolynomial WordPolynomial::operator*(const WordPolynomial& o) const {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("WordPolynomial: alphabet mismatch");
    WordPolynomial out(alphabet_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            out.add_term(w, c1 * c2);
        }
    return out;
}

void MonomialPolynomial::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != alphabet_)
        throw std::invalid_argument("MonomialPolynomial: exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MonomialPolynomial& MonomialPolynomial::operator+=(const MonomialPolynomial& o) {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("MonomialPolynomial: alphabet mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MonomialPolynomial& MonomialPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MonomialPolynomial MonomialPolynomial::operator*(const MonomialPolynomial& o) const {
    if (alphabet_ != o.alphabet_)
        throw std::invalid_argument("MonomialPolynomial: alphabet mismatch");
    MonomialPolynomial out(alphabet_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e = e1;
            for (int i = 0; i < alphabet_; ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

WordPolynomial expand_ncsym(Basis basis, const SetPartition& shape, int k) {
    if (k < 1) throw std::invalid_argument("expand_ncsym: need at least one variable");
    if (basis == Basis::Natural)
        throw std::invalid_argument("expand_ncsym: convert to one of m/p/e/h first");
    const int n = shape.ground().size();
    std::vector<int> block_of(n);  // block index per atom position
    for (int i = 0; i < n; ++i) {
        Atom a = shape.ground().atoms()[i];
        for (int b = 0; b < shape.block_count(); ++b)
            if (shape.blocks()[b].contains(a)) block_of[i] = b;
    }
    const int nblocks = shape.block_count();

    WordPolynomial out(k);
    Word w(n, 1);
    auto emit = [&]() {
        // letters constant on blocks?
        std::vector<int> block_value(nblocks, 0);
        bool constant = true;
        for (int i = 0; i < n; ++i) {
            if (block_value[block_of[i]] == 0)
                block_value[block_of[i]] = w[i];
            else if (block_value[block_of[i]] != w[i])
                constant = false;
        }
        switch (basis) {
            case Basis::M: {
                if (!constant) return;
                std::set<int> distinct(block_value.begin(), block_value.end());
                if (static_cast<int>(distinct.size()) == nblocks) out.add_term(w, 1);
                return;
            }
            case Basis::P:
                if (constant) out.add_term(w, 1);
                return;
            case Basis::E: {
                for (int b = 0; b < nblocks; ++b) {
                    std::set<int> seen;
                    for (int i = 0; i < n; ++i)
                        if (block_of[i] == b && !seen.insert(w[i]).second) return;
                }
                out.add_term(w, 1);
                return;
            }
            case Basis::H: {
                // count the linear orderings of every fiber within a block
                Rational coeff = 1;
                for (int b = 0; b < nblocks; ++b) {
                    std::map<int, int> fiber;
                    for (int i = 0; i < n; ++i)
                        if (block_of[i] == b) ++fiber[w[i]];
                    for (const auto& [letter, count] : fiber) coeff *= Rational(factorial(count));
                }
                out.add_term(w, coeff);
                return;
            }
            case Basis::Natural: return;
        }
    };
    if (n == 0) {
        out.add_term({}, 1);
        return out;
    }
    // odometer over all k^n letter assignments
    while (true) {
        emit();
        int i = n - 1;
        while (i >= 0 && w[i] == k) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

namespace {

MonomialPolynomial sym_generator(Basis basis, int part, int k) {
    MonomialPolynomial out(k);
    switch (basis) {
        case Basis::P:
            for (int i = 0; i < k; ++i) {
                std::vector<int> e(k, 0);
                e[i] = part;
                out.add_term(e, 1);
            }
            break;
        case Basis::E:
        case Basis::H: {
            const bool strict = basis == Basis::E;
            // tuples i_1 <(=) i_2 <(=) ... <(=) i_part
            std::vector<int> idx;
            std::function<void(int)> rec = [&](int next_min) {
                if (static_cast<int>(idx.size()) == part) {
                    std::vector<int> e(k, 0);
                    for (int i : idx) ++e[i];
                    out.add_term(e, 1);
                    return;
                }
                for (int i = next_min; i < k; ++i) {
                    idx.push_back(i);
                    rec(strict ? i + 1 : i);
                    idx.pop_back();
                }
            };
            rec(0);
            break;
        }
        default:
            throw std::logic_error("sym_generator: bad basis");
    }
    return out;
}

}  // namespace

MonomialPolynomial expand_sym(Basis basis, const IntegerPartition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("expand_sym: need at least one variable");
    MonomialPolynomial out(k);
    switch (basis) {
        case Basis::Natural:
            throw std::invalid_argument("expand_sym: convert to one of m/p/e/h first");
        case Basis::M: {
            // distinct monomials whose nonzero exponents are the parts
            std::set<std::vector<int>> seen;
            std::vector<int> e(k, 0);
            std::function<void(int)> rec = [&](int part_index) {
                if (part_index == lambda.length()) {
                    seen.insert(e);
                    return;
                }
                for (int i = 0; i < k; ++i)
                    if (e[i] == 0) {
                        e[i] = lambda.parts()[part_index];
                        rec(part_index + 1);
                        e[i] = 0;
                    }
            };
            rec(0);
            for (const auto& expo : seen) out.add_term(expo, 1);
            break;
        }
        case Basis::P:
        case Basis::E:
        case Basis::H: {
            out.add_term(std::vector<int>(k, 0), 1);
            for (int part : lambda.parts()) out = out * sym_generator(basis, part, k);
            break;
        }
    }
    return out;
}

MonomialPolynomial rho(const WordPolynomial& f) {
    MonomialPolynomial out(f.alphabet());
    for (const auto& [w, c] : f.terms()) {
        std::vector<int> e(f.alphabet(), 0);
        for (int letter : w) ++e[letter - 1];
        out.add_term(e, c);
    }
    return out;
}

std::map<std::pair<Word, Word>, Rational> split_alphabet(const WordPolynomial& f) {
    if (f.alphabet() % 2 != 0)
        throw std::invalid_argument("split_alphabet: alphabet size must be even");
    std::map<std::pair<Word, Word>, Rational> out;
    for (const auto& [w, c] : f.terms()) {
        Word x, y;
        for (int letter : w) {
            if (letter % 2 == 1)
                x.push_back((letter + 1) / 2);
            else
                y.push_back(letter / 2);
        }
        out[{std::move(x), std::move(y)}] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> split_alphabet(
    const MonomialPolynomial& f) {
    if (f.alphabet() % 2 != 0)
        throw std::invalid_argument("split_alphabet: alphabet size must be even");
    const int k = f.alphabet() / 2;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> out;
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> x(k), y(k);
        for (int i = 0; i < k; ++i) {
            x[i] = e[2 * i];
            y[i] = e[2 * i + 1];
        }
        out[{std::move(x), std::move(y)}] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

WordPolynomial expand_graded_ncsym(const GradedElement& a, int k) {
    WordPolynomial out(k);
    for (const auto& [x, c] : a.terms()) {
        for (const auto& [b, lab] : x.blocks())
            if (lab.kind != LabelKind::Trivial)
                throw std::invalid_argument("expand_graded_ncsym: trivial labels required");
        out += c * expand_ncsym(a.basis(), x.shape(), k);
    }
    return out;
}

void SymElement::add_term(const IntegerPartition& lambda, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MonomialPolynomial SymElement::expansion(int k) const {
    MonomialPolynomial out(k);
    for (const auto& [lambda, c] : terms) out += c * expand_sym(basis, lambda, k);
    return out;
}

SymElement sym_convert(const SymElement& s, Basis target) {
    if (s.basis == target) return s;
    if (s.basis == Basis::Natural || target == Basis::Natural)
        throw std::invalid_argument("sym_convert: only the classical bases are defined");
    SymElement out{target, {}};
    // degree by degree: solve the expansion in the target basis with k = n
    std::map<int, std::vector<std::pair<IntegerPartition, Rational>>> by_weight;
    for (const auto& [lambda, c] : s.terms) by_weight[lambda.weight()].push_back({lambda, c});
    for (const auto& [n, terms] : by_weight) {
        if (n == 0) {
            for (const auto& [lambda, c] : terms) out.add_term(lambda, c);
            continue;
        }
        const int k = n;
        MonomialPolynomial target_poly(k);
        for (const auto& [lambda, c] : terms) target_poly += c * expand_sym(s.basis, lambda, k);
        std::vector<IntegerPartition> mus = integer_partitions(n);
        std::vector<MonomialPolynomial> cols;
        std::set<std::vector<int>> keys;
        for (const auto& mu : mus) {
            cols.push_back(expand_sym(target, mu, k));
            for (const auto& [e, c] : cols.back().terms()) keys.insert(e);
        }
        for (const auto& [e, c] : target_poly.terms()) keys.insert(e);
        std::vector<std::vector<int>> key_list(keys.begin(), keys.end());
        const int rows = static_cast<int>(key_list.size());
        const int ncols = static_cast<int>(mus.size());
        // dense augmented system, one column per candidate basis element
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1));
        for (int j = 0; j < ncols; ++j)
            for (const auto& [e, c] : cols[j].terms())
                a[std::lower_bound(key_list.begin(), key_list.end(), e) - key_list.begin()][j] =
                    c;
        for (const auto& [e, c] : target_poly.terms())
            a[std::lower_bound(key_list.begin(), key_list.end(), e) - key_list.begin()][ncols] =
                c;
        // gaussian elimination
        std::vector<int> pivot_row(ncols, -1);
        int r = 0;
        for (int j = 0; j < ncols && r < rows; ++j) {
            int p = -1;
            for (int i = r; i < rows; ++i)
                if (!a[i][j].is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(a[p], a[r]);
            Rational inv = Rational(1) / a[r][j];
            for (int jj = j; jj <= ncols; ++jj) a[r][jj] *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || a[i][j].is_zero()) continue;
                Rational factor = a[i][j];
                for (int jj = j; jj <= ncols; ++jj) a[i][jj] -= factor * a[r][jj];
            }
            pivot_row[j] = r;
            ++r;
        }
        for (int i = r; i < rows; ++i)
            if (!a[i][ncols].is_zero())
                throw std::logic_error("sym_convert: inconsistent system");
        for (int j = 0; j < ncols; ++j) {
            if (pivot_row[j] < 0) {
                if (ncols > static_cast<int>(mus.size()))
                    throw std::logic_error("sym_convert: underdetermined system");
                continue;
            }
            out.add_term(mus[j], a[pivot_row[j]][ncols]);
        }
    }
    return out;
}

Rational coinvariant_scalar(Basis basis, const IntegerPartition& lambda) {
    PartitionStats st = partition_stats(lambda);
    switch (basis) {
        case Basis::P: return 1;
        case Basis::M: return Rational(st.multiplicity_product);
        case Basis::E:
        case Basis::H: return Rational(st.factorial_product);
        case Basis::Natural: break;
    }
    throw std::invalid_argument("coinvariant_scalar: only the classical bases are defined");
}

Report verify_f_iso(int n_max, int k) {
    if (k < n_max) throw std::invalid_argument("verify_f_iso: need k >= n_max");
    Report report{"set-partition Hopf algebras against polynomial models", {}};
    auto monoid = std::make_shared<SpeciesHopfMonoid>(trivial_labels());
    GradedHopfAlgebra full(monoid, GradedHopfAlgebra::Flavor::Full);
    GradedHopfAlgebra coinv(monoid, GradedHopfAlgebra::Flavor::Coinvariant);

    const Basis bases[] = {Basis::M, Basis::P, Basis::E, Basis::H};

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

    // products at the full level match word multiplication
    for (Basis b : bases)
        for (int m = 1; m < n_max; ++m)
            for (int n = 1; m + n <= n_max; ++n)
                for (const auto& x : full.basis(m))
                    for (const auto& y : full.basis(n)) {
                        WordPolynomial lhs =
                            expand_ncsym(b, x.shape(), k) * expand_ncsym(b, y.shape(), k);
                        GradedElement prod =
                            full.product(GradedElement::of(x, b), GradedElement::of(y, b));
                        WordPolynomial rhs = expand_graded_ncsym(prod, k);
                        expect(lhs == rhs, "word product mismatch in basis " + to_string(b) +
                                               " at " + x.shape().encode() + " * " +
                                               y.shape().encode());
                    }
    flush("noncommuting products in all four bases");

    // coproducts at the full level match the interleaved alphabet splitting
    for (Basis b : bases)
        for (int n = 1; n <= n_max; ++n)
            for (const auto& x : full.basis(n)) {
                auto lhs = split_alphabet(expand_ncsym(b, x.shape(), 2 * k));
                GradedTensor t = full.coproduct(GradedElement::of(x, b));
                std::map<std::pair<Word, Word>, Rational> rhs;
                for (const auto& [pair, c] : t.terms) {
                    WordPolynomial l = expand_ncsym(b, pair.first.shape(), k);
                    WordPolynomial r = expand_ncsym(b, pair.second.shape(), k);
                    for (const auto& [wl, cl] : l.terms())
                        for (const auto& [wr, cr] : r.terms()) {
                            Rational v = c * cl * cr;
                            auto key = std::make_pair(wl, wr);
                            auto [it, inserted] = rhs.emplace(key, v);
                            if (!inserted) {
                                it->second += v;
                                if (it->second.is_zero()) rhs.erase(it);
                            }
                        }
                }
                expect(lhs == rhs,
                       "word coproduct mismatch in basis " + to_string(b) + " at " +
                           x.shape().encode());
            }
    flush("noncommuting coproducts in all four bases");

    // coinvariant level: the dictionary with scalars intertwines products
    for (Basis b : bases)
        for (int m = 1; m < n_max; ++m)
            for (int n = 1; m + n <= n_max; ++n)
                for (const auto& x : coinv.basis(m))
                    for (const auto& y : coinv.basis(n)) {
                        IntegerPartition lx = partition_type(x.shape());
                        IntegerPartition ly = partition_type(y.shape());
                        MonomialPolynomial lhs = coinvariant_scalar(b, lx) *
                                                 (coinvariant_scalar(b, ly) *
                                                  (expand_sym(b, lx, k) * expand_sym(b, ly, k)));
                        GradedElement prod =
                            coinv.product(GradedElement::of(x, b), GradedElement::of(y, b));
                        MonomialPolynomial rhs(k);
                        for (const auto& [g, c] : prod.terms()) {
                            IntegerPartition lg = partition_type(g.shape());
                            rhs += (c * coinvariant_scalar(b, lg)) * expand_sym(b, lg, k);
                        }
                        expect(lhs == rhs, "commuting product mismatch in basis " +
                                               to_string(b) + " at types " + lx.encode() +
                                               " * " + ly.encode());
                    }
    flush("commuting products under the scalar dictionary");

    // coinvariant level coproducts
    for (Basis b : bases)
        for (int n = 1; n <= n_max; ++n)
            for (const auto& x : coinv.basis(n)) {
                IntegerPartition lx = partition_type(x.shape());
                auto lhs = split_alphabet(coinvariant_scalar(b, lx) *
                                          expand_sym(b, lx, 2 * k));
                GradedTensor t = coinv.coproduct(GradedElement::of(x, b));
                std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> rhs;
                for (const auto& [pair, c] : t.terms) {
                    IntegerPartition ll = partition_type(pair.first.shape());
                    IntegerPartition lr = partition_type(pair.second.shape());
                    MonomialPolynomial l =
                        (c * coinvariant_scalar(b, ll)) * expand_sym(b, ll, k);
                    MonomialPolynomial r = coinvariant_scalar(b, lr) * expand_sym(b, lr, k);
                    for (const auto& [el, cl] : l.terms())
                        for (const auto& [er, cr] : r.terms()) {
                            Rational v = cl * cr;
                            auto key = std::make_pair(el, er);
                            auto [it, inserted] = rhs.emplace(key, v);
                            if (!inserted) {
                                it->second += v;
                                if (it->second.is_zero()) rhs.erase(it);
                            }
                        }
                }
                expect(lhs == rhs, "commuting coproduct mismatch in basis " + to_string(b) +
                                       " at type " + lx.encode());
            }
    flush("commuting coproducts under the scalar dictionary");

    // letting variables commute intertwines the two levels
    for (Basis b : bases)
        for (int n = 1; n <= n_max; ++n)
            for (const auto& x : full.basis(n)) {
                IntegerPartition lx = partition_type(x.shape());
                MonomialPolynomial lhs = rho(expand_ncsym(b, x.shape(), k));
                MonomialPolynomial rhs = coinvariant_scalar(b, lx) * expand_sym(b, lx, k);
                expect(lhs == rhs, "projection mismatch in basis " + to_string(b) + " at " +
                                       x.shape().encode());
            }
    flush("variable-commuting projection respects the dictionary");

    return report;
}

}  // namespace sphopf
