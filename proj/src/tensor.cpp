#include "pregroup/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace pregroup {

namespace {

std::string format_value(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

Tensor outer(const Tensor& a, const Tensor& b) {
    Tensor out;
    out.shape.factors = a.shape.factors;
    out.shape.factors.insert(out.shape.factors.end(), b.shape.factors.begin(),
                             b.shape.factors.end());
    out.shape.dims = a.shape.dims;
    out.shape.dims.insert(out.shape.dims.end(), b.shape.dims.begin(), b.shape.dims.end());
    out.values.resize(a.values.size() * b.values.size());
    std::size_t idx = 0;
    for (double av : a.values)
        for (double bv : b.values) out.values[idx++] = av * bv;
    return out;
}

std::vector<std::size_t> row_major_strides(const std::vector<int>& dims) {
    std::vector<std::size_t> strides(dims.size());
    std::size_t s = 1;
    for (std::size_t k = dims.size(); k-- > 0;) {
        strides[k] = s;
        s *= static_cast<std::size_t>(dims[k]);
    }
    return strides;
}

// Sums the diagonal of axes p < q, removing both.
Tensor trace_pair(const Tensor& t, std::size_t p, std::size_t q) {
    const std::vector<int>& dims = t.shape.dims;
    if (dims[p] != dims[q])
        throw Error("contraction pairs axes of unequal dimension");
    const auto strides = row_major_strides(dims);

    Tensor out;
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k == p || k == q) continue;
        kept.push_back(k);
        out.shape.factors.push_back(t.shape.factors[k]);
        out.shape.dims.push_back(dims[k]);
    }
    out.values.assign(out.shape.value_count(), 0.0);

    const std::size_t diag_stride = strides[p] + strides[q];
    const int diag_dim = dims[p];
    std::vector<int> idx(kept.size(), 0);
    for (std::size_t flat = 0; flat < out.values.size(); ++flat) {
        std::size_t base = 0;
        for (std::size_t k = 0; k < kept.size(); ++k)
            base += static_cast<std::size_t>(idx[k]) * strides[kept[k]];
        double sum = 0.0;
        for (int d = 0; d < diag_dim; ++d)
            sum += t.values[base + static_cast<std::size_t>(d) * diag_stride];
        out.values[flat] = sum;
        for (std::size_t k = kept.size(); k-- > 0;) {
            if (++idx[k] < out.shape.dims[k]) break;
            idx[k] = 0;
        }
    }
    return out;
}

}  // namespace

int SpaceTable::dim(const std::string& name) const {
    for (const auto& [n, d] : spaces)
        if (n == name) return d;
    throw Error("undeclared space '" + name + "'");
}

bool SpaceTable::has(const std::string& name) const {
    for (const auto& [n, d] : spaces) {
        (void)d;
        if (n == name) return true;
    }
    return false;
}

std::string to_string(const SpaceFactor& f) { return f.dual ? f.space + "*" : f.space; }

const FactorList& BasicInterpretation::at(const std::string& base) const {
    for (const auto& [b, factors] : map)
        if (b == base) return factors;
    throw Error("no interpretation for basic type '" + base + "'");
}

bool BasicInterpretation::has(const std::string& base) const {
    for (const auto& [b, factors] : map) {
        (void)factors;
        if (b == base) return true;
    }
    return false;
}

void BasicInterpretation::validate_against(const TypePoset& poset) const {
    for (const auto& [a, fa] : map)
        for (const auto& [b, fb] : map) {
            if (a == b || !poset.contains(a) || !poset.contains(b)) continue;
            if (poset.leq(a, b) && fa != fb)
                throw Error("order-related types '" + a + "' and '" + b +
                            "' have different interpretations");
        }
}

BasicInterpretation default_english_interpretation() {
    BasicInterpretation interp;
    for (const char* base : {"n", "n0", "n1", "n2", "nbar", "nbar1", "nbar2", "pi", "pi1",
                             "pi2", "pi3", "pi4", "pi5", "pi6", "o", "a", "abar"})
        interp.map.emplace_back(base, FactorList{{"N", false}});
    for (const char* base : {"s", "s1", "s2", "q", "q1", "q2", "qbar"})
        interp.map.emplace_back(base, FactorList{{"S", false}});
    for (const char* base : {"i", "j"})
        interp.map.emplace_back(base, FactorList{{"N", true}, {"S", false}});
    return interp;
}

std::size_t Shape::value_count() const {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
}

Tensor scalar_tensor(double value) {
    Tensor t;
    t.values = {value};
    return t;
}

FactorList interpret_simple(const SimpleType& t, const BasicInterpretation& interp) {
    FactorList out = interp.at(t.base);
    if (t.z % 2 != 0) {
        std::reverse(out.begin(), out.end());
        for (SpaceFactor& f : out) f.dual = !f.dual;
    }
    return out;
}

Shape interpret_term(const Term& term, const BasicInterpretation& interp,
                     const SpaceTable& spaces) {
    Shape shape;
    for (const SimpleType& t : term.factors)
        for (SpaceFactor& f : interpret_simple(t, interp)) {
            shape.dims.push_back(spaces.dim(f.space));
            shape.factors.push_back(std::move(f));
        }
    return shape;
}

ContractionPlan contraction_plan(const Derivation& d, const BasicInterpretation& interp,
                                 const SpaceTable& spaces) {
    const std::size_t n = d.term.size();
    std::vector<FactorList> lists(n);
    std::vector<int> offsets(n, 0);
    int total = 0;
    for (std::size_t p = 0; p < n; ++p) {
        lists[p] = interpret_simple(d.term[p], interp);
        offsets[p] = total;
        total += static_cast<int>(lists[p].size());
    }

    ContractionPlan plan;
    plan.position_offset = offsets;
    for (const Link& l : d.links) {
        const FactorList& fi = lists[static_cast<std::size_t>(l.i - 1)];
        const FactorList& fj = lists[static_cast<std::size_t>(l.j - 1)];
        const std::string where =
            "link " + std::to_string(l.i) + "-" + std::to_string(l.j);
        if (fi.size() != fj.size())
            throw Error("space mismatch at " + where + ": factor counts " +
                        std::to_string(fi.size()) + " vs " + std::to_string(fj.size()));
        for (std::size_t k = 0; k < fi.size(); ++k) {
            const SpaceFactor& a = fi[k];
            const SpaceFactor& b = fj[fj.size() - 1 - k];
            if (a.space != b.space || a.dual == b.dual)
                throw Error("space mismatch at " + where + " factor " +
                            std::to_string(k + 1) + ": " + to_string(a) + " vs " +
                            to_string(b));
            plan.pairs.push_back(AxisPair{offsets[static_cast<std::size_t>(l.i - 1)] +
                                              static_cast<int>(k),
                                          offsets[static_cast<std::size_t>(l.j - 1)] +
                                              static_cast<int>(fj.size() - 1 - k)});
        }
    }
    const std::size_t sp = static_cast<std::size_t>(d.survivor - 1);
    for (std::size_t k = 0; k < lists[sp].size(); ++k)
        plan.output_axes.push_back(offsets[sp] + static_cast<int>(k));
    for (const SpaceFactor& f : lists[sp]) {
        plan.output_shape.dims.push_back(spaces.dim(f.space));
        plan.output_shape.factors.push_back(f);
    }
    return plan;
}

Tensor contract(const std::vector<Tensor>& word_tensors, const ContractionPlan& plan) {
    Tensor cur = scalar_tensor(1.0);
    std::vector<int> live;  // global axis id of each current axis
    std::vector<bool> done(plan.pairs.size(), false);
    int next_axis = 0;

    auto live_pos = [&](int axis) -> int {
        for (std::size_t k = 0; k < live.size(); ++k)
            if (live[k] == axis) return static_cast<int>(k);
        return -1;
    };

    for (const Tensor& t : word_tensors) {
        cur = outer(cur, t);
        for (std::size_t k = 0; k < t.shape.factors.size(); ++k) live.push_back(next_axis++);
        for (bool progressed = true; progressed;) {
            progressed = false;
            for (std::size_t pi = 0; pi < plan.pairs.size(); ++pi) {
                if (done[pi]) continue;
                const int pa = live_pos(plan.pairs[pi].a);
                const int pb = live_pos(plan.pairs[pi].b);
                if (pa < 0 || pb < 0) continue;
                const std::size_t lo = static_cast<std::size_t>(std::min(pa, pb));
                const std::size_t hi = static_cast<std::size_t>(std::max(pa, pb));
                cur = trace_pair(cur, lo, hi);
                live.erase(live.begin() + static_cast<long>(hi));
                live.erase(live.begin() + static_cast<long>(lo));
                done[pi] = true;
                progressed = true;
            }
        }
    }

    for (bool flag : done)
        if (!flag) throw Error("contraction plan refers to axes outside the word tensors");
    std::vector<int> expected(plan.output_axes);
    if (live != expected) throw Error("contraction left unexpected free axes");
    cur.shape = plan.output_shape;
    return cur;
}

Tensor contract_in_order(const std::vector<Tensor>& word_tensors, const ContractionPlan& plan,
                         const std::vector<int>& pair_order) {
    if (pair_order.size() != plan.pairs.size())
        throw Error("pair order must be a permutation of the plan's pairs");
    Tensor cur = scalar_tensor(1.0);
    std::vector<int> live;
    int next_axis = 0;
    for (const Tensor& t : word_tensors) {
        cur = outer(cur, t);
        for (std::size_t k = 0; k < t.shape.factors.size(); ++k) live.push_back(next_axis++);
    }
    for (int pi : pair_order) {
        const AxisPair& pair = plan.pairs[static_cast<std::size_t>(pi)];
        int pa = -1, pb = -1;
        for (std::size_t k = 0; k < live.size(); ++k) {
            if (live[k] == pair.a) pa = static_cast<int>(k);
            if (live[k] == pair.b) pb = static_cast<int>(k);
        }
        if (pa < 0 || pb < 0) throw Error("plan pair outside the word tensors");
        const std::size_t lo = static_cast<std::size_t>(std::min(pa, pb));
        const std::size_t hi = static_cast<std::size_t>(std::max(pa, pb));
        cur = trace_pair(cur, lo, hi);
        live.erase(live.begin() + static_cast<long>(hi));
        live.erase(live.begin() + static_cast<long>(lo));
    }
    if (live != plan.output_axes) throw Error("contraction left unexpected free axes");
    cur.shape = plan.output_shape;
    return cur;
}

WordModel::WordModel(SpaceTable spaces, BasicInterpretation interp)
    : spaces_(std::move(spaces)), interp_(std::move(interp)) {}

void WordModel::add(const std::string& word, const Term& term, Tensor tensor) {
    for (double v : tensor.values)
        if (!std::isfinite(v)) throw Error("non-finite value in tensor for '" + word + "'");
    entries_.emplace_back(std::make_pair(word, term), std::move(tensor));
}

const Tensor* WordModel::find(const std::string& word, const Term& term) const {
    for (const auto& [key, tensor] : entries_)
        if (key.first == word && key.second == term) return &tensor;
    return nullptr;
}

Tensor evaluate(const Parse& parse, const WordModel& model) {
    std::vector<Tensor> tensors;
    tensors.reserve(parse.tokens.size());
    for (std::size_t k = 0; k < parse.tokens.size(); ++k) {
        const Tensor* t = model.find(parse.tokens[k], parse.choice[k]);
        if (!t) {
            const Tensor* lower = model.find(
                [&] {
                    std::string w = parse.tokens[k];
                    for (char& c : w) c = static_cast<char>(std::tolower(
                                          static_cast<unsigned char>(c)));
                    return w;
                }(),
                parse.choice[k]);
            if (!lower)
                throw Error("no tensor for word '" + parse.tokens[k] + "' with type " +
                            to_string(parse.choice[k]));
            t = lower;
        }
        const Shape expected =
            interpret_term(parse.choice[k], model.interpretation(), model.spaces());
        if (t->shape.dims != expected.dims || t->shape.factors != expected.factors)
            throw Error("tensor shape for '" + parse.tokens[k] +
                        "' does not match its type interpretation");
        tensors.push_back(*t);
    }
    const ContractionPlan plan =
        contraction_plan(parse.derivation, model.interpretation(), model.spaces());
    return contract(tensors, plan);
}

Tensor lift_auxiliary(const Matrix& mu, AuxiliaryVariant variant, const SpaceTable& spaces,
                      const std::string& noun_space, const std::string& sentence_space) {
    const int dn = spaces.dim(noun_space);
    const int ds = spaces.dim(sentence_space);
    if (mu.rows != mu.cols || mu.rows != ds)
        throw Error("auxiliary endomorphism must be square with dim(" + sentence_space + ")");

    Tensor t;
    if (variant == AuxiliaryVariant::Declarative) {
        t.shape.factors = {{noun_space, true},
                           {sentence_space, false},
                           {sentence_space, true},
                           {noun_space, false}};
        t.shape.dims = {dn, ds, ds, dn};
        t.values.assign(t.shape.value_count(), 0.0);
        for (int n = 0; n < dn; ++n)
            for (int s = 0; s < ds; ++s)
                for (int s2 = 0; s2 < ds; ++s2)
                    t.values[static_cast<std::size_t>(((n * ds + s) * ds + s2) * dn + n)] =
                        mu.at(s, s2);
    } else {
        t.shape.factors = {{sentence_space, false},
                           {sentence_space, true},
                           {noun_space, false},
                           {noun_space, true}};
        t.shape.dims = {ds, ds, dn, dn};
        t.values.assign(t.shape.value_count(), 0.0);
        for (int s = 0; s < ds; ++s)
            for (int s2 = 0; s2 < ds; ++s2)
                for (int n = 0; n < dn; ++n)
                    t.values[static_cast<std::size_t>(((s * ds + s2) * dn + n) * dn + n)] =
                        mu.at(s, s2);
    }
    return t;
}

Tensor lift_wh_subject(const std::vector<double>& v, const SpaceTable& spaces,
                       const std::string& noun_space, const std::string& sentence_space) {
    const int dn = spaces.dim(noun_space);
    const int ds = spaces.dim(sentence_space);
    if (static_cast<int>(v.size()) != dn)
        throw Error("wh-subject vector has dimension " + std::to_string(v.size()) +
                    ", expected dim(" + noun_space + ") = " + std::to_string(dn));
    Tensor t;
    t.shape.factors = {{sentence_space, false}, {sentence_space, true}, {noun_space, false}};
    t.shape.dims = {ds, ds, dn};
    t.values.assign(t.shape.value_count(), 0.0);
    for (int s = 0; s < ds; ++s)
        for (int m = 0; m < dn; ++m)
            t.values[static_cast<std::size_t>((s * ds + s) * dn + m)] =
                v[static_cast<std::size_t>(m)];
    return t;
}

double cosine(const Tensor& u, const Tensor& v) {
    if (u.shape.dims != v.shape.dims || u.shape.factors != v.shape.factors)
        throw Error("cosine: shape mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        dot += u.values[k] * v.values[k];
        nu += u.values[k] * u.values[k];
        nv += v.values[k] * v.values[k];
    }
    if (nu == 0.0 || nv == 0.0) throw Error("cosine of a zero vector");
    return std::clamp(dot / std::sqrt(nu * nv), -1.0, 1.0);
}

DimAuditReport dim_audit(long long m, long long n, long long p) {
    if (m < 1 || n < 1 || p < 1) throw Error("dim_audit needs positive dimensions");
    DimAuditReport r;
    r.m = m;
    r.n = n;
    r.p = p;
    r.tensor_left = m * n * p;
    r.tensor_right = m * n * p;
    r.direct_sum_left = p * (m + n);
    r.direct_sum_right = m + p * n;
    r.tensor_equal = r.tensor_left == r.tensor_right;
    r.direct_sum_equal = r.direct_sum_left == r.direct_sum_right;
    return r;
}

std::string to_string(const DimAuditReport& r) {
    std::ostringstream out;
    out << "term x.y.z^l with dim x = " << r.m << ", dim y = " << r.n << ", dim z = " << r.p
        << "\n";
    out << "  tensor semantics:     dim((x.y).z^l) = " << r.tensor_left
        << ", dim(x.(y.z^l)) = " << r.tensor_right << "  -> "
        << (r.tensor_equal ? "equal" : "NOT equal") << "\n";
    out << "  direct-sum semantics: dim((x.y).z^l) = p(m+n) = " << r.direct_sum_left
        << ", dim(x.(y.z^l)) = m+pn = " << r.direct_sum_right << "  -> "
        << (r.direct_sum_equal ? "equal" : "NOT equal") << "\n";
    return out.str();
}

RawTensor read_raw_tensor(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw SyntaxError("empty tensor file", 1);
    std::istringstream hs(header);
    std::string keyword;
    hs >> keyword;
    if (keyword != "shape") throw SyntaxError("tensor file must start with 'shape'", 1);
    RawTensor raw;
    for (int d; hs >> d;) {
        if (d < 1) throw SyntaxError("tensor dimension must be >= 1", 1);
        raw.dims.push_back(d);
    }
    std::size_t count = 1;
    for (int d : raw.dims) count *= static_cast<std::size_t>(d);
    raw.values.reserve(count);
    double v;
    while (raw.values.size() < count && in >> v) {
        if (!std::isfinite(v)) throw Error("non-finite tensor value");
        raw.values.push_back(v);
    }
    if (raw.values.size() != count)
        throw Error("tensor file has " + std::to_string(raw.values.size()) +
                    " values, expected " + std::to_string(count));
    return raw;
}

RawTensor read_raw_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open tensor file '" + path + "'");
    return read_raw_tensor(in);
}

void write_tensor(std::ostream& out, const Tensor& t, int digits) {
    out << "shape";
    for (int d : t.shape.dims) out << ' ' << d;
    out << "\n";
    const std::size_t row =
        t.shape.dims.empty() ? 1 : static_cast<std::size_t>(t.shape.dims.back());
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        out << format_value(t.values[k], digits);
        out << ((k + 1) % row == 0 ? '\n' : ' ');
    }
    if (t.values.size() % row != 0) out << '\n';
}

WordModel load_word_model(const std::string& manifest_path, const TypePoset& poset) {
    std::ifstream in(manifest_path);
    if (!in) throw Error("cannot open word-model manifest '" + manifest_path + "'");
    const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();

    SpaceTable spaces;
    BasicInterpretation interp;
    bool saw_space = false, saw_interp = false, saw_word = false;
    struct PendingEntry {
        std::string word;
        std::string expr;
        std::string file;
        int line;
    };
    std::vector<PendingEntry> pending;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = line.substr(0, line.find('#'));
        if (body.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream ls(body);
        std::string first;
        ls >> first;
        if (first == "@space") {
            if (saw_word) throw SyntaxError("@space after word entries", line_no);
            std::string name;
            int dim = 0;
            if (!(ls >> name >> dim) || dim < 1)
                throw SyntaxError("expected '@space <name> <dim>'", line_no);
            spaces.spaces.emplace_back(name, dim);
            saw_space = true;
        } else if (first == "@interp") {
            if (saw_word) throw SyntaxError("@interp after word entries", line_no);
            std::string base_name, colon, factor;
            if (!(ls >> base_name >> colon) || colon != ":")
                throw SyntaxError("expected '@interp <basic> : <factor> ...'", line_no);
            FactorList factors;
            while (ls >> factor) {
                SpaceFactor f;
                f.dual = !factor.empty() && factor.back() == '*';
                f.space = f.dual ? factor.substr(0, factor.size() - 1) : factor;
                factors.push_back(std::move(f));
            }
            if (factors.empty()) throw SyntaxError("empty interpretation", line_no);
            interp.map.emplace_back(base_name, std::move(factors));
            saw_interp = true;
        } else {
            // word <tab> type-expr <tab> tensor-file
            std::vector<std::string> fields;
            std::string field;
            std::istringstream fs(body);
            while (std::getline(fs, field, '\t')) {
                const auto b = field.find_first_not_of(" \r\n");
                if (b == std::string::npos) continue;
                const auto e = field.find_last_not_of(" \r\n");
                fields.push_back(field.substr(b, e - b + 1));
            }
            if (fields.size() != 3)
                throw SyntaxError("expected '<word> <tab> <type-expr> <tab> <file>'",
                                  line_no);
            pending.push_back(PendingEntry{fields[0], fields[1], fields[2], line_no});
            saw_word = true;
        }
    }

    if (!saw_space) spaces.spaces = {{"N", 3}, {"S", 2}};
    if (!saw_interp) {
        for (auto& [base_name, factors] : default_english_interpretation().map)
            if (poset.contains(base_name)) interp.map.emplace_back(base_name, factors);
    }
    interp.validate_against(poset);

    WordModel model(spaces, interp);
    for (const auto& entry : pending) {
        Term term;
        try {
            term = parse_type_expr(entry.expr, poset);
        } catch (const Error& e) {
            throw SyntaxError(e.what(), entry.line);
        }
        const RawTensor raw = read_raw_tensor_file((base / entry.file).string());
        const Shape shape = interpret_term(term, model.interpretation(), model.spaces());
        if (raw.dims != shape.dims)
            throw Error("tensor dims for word '" + entry.word + "' do not match type " +
                        to_string(term));
        model.add(entry.word, term, Tensor{shape, raw.values});
    }
    return model;
}

}  // namespace pregroup
