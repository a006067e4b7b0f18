#include "multisym/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "multisym/error.hpp"
#include "multisym/poly_io.hpp"
#include "multisym/s4pairs.hpp"
#include "multisym/syzygy.hpp"
#include "multisym/tensor.hpp"
#include "multisym/trace.hpp"

namespace multisym::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    bool ok = true;
    json payload = json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    std::string out;

    std::string algebra = "poly:2";
    unsigned n = 2;
    std::string words;
    std::string poly;
    std::string mode = "symbolic";
    unsigned trials = 20;
    std::optional<unsigned> max_degree;
    std::string matrices;
    std::string edges;
    std::vector<std::string> relations;
};

std::string render_tensor(const BasedAlgebra& a, const Tensor& t) {
    if (a.kind() != AlgebraKind::StructureConstant) return render(to_poly(a, t));
    if (t.is_zero()) return "0";
    std::string out;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        const auto& [tuple, c] = *it;
        std::string factor;
        for (const auto& w : tuple) factor += (factor.empty() ? "" : "@") + (w.key.empty() ? std::string("1") : a.word_name(w));
        const bool negative = c.sign() < 0;
        const Rat magnitude = negative ? -c : c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (!magnitude.is_one()) out += magnitude.str() + "*";
        out += factor;
    }
    return out;
}

// "3*[x]*[x2] - 2*[x3]" (brackets) or "2*O{x,x} + O{x2}" (orbit sums)
std::string render_coords(const BasedAlgebra& a, const MultisetCoordinates& coords, bool brackets) {
    if (coords.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : coords) {
        std::string basis;
        if (mu.empty()) {
            basis = "1";
        } else if (brackets) {
            for (const auto& w : mu) basis += (basis.empty() ? "[" : "*[") + a.word_name(w) + "]";
        } else {
            basis = "O" + multiset_name(a, mu);
        }
        const bool negative = c.sign() < 0;
        const Rat magnitude = negative ? -c : c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (!magnitude.is_one() || basis == "1") out += magnitude.str() + (basis == "1" ? "" : "*");
        if (basis != "1") out += basis;
    }
    return out;
}

json coords_json(const BasedAlgebra& a, const MultisetCoordinates& coords) {
    json j = json::object();
    for (const auto& [mu, c] : coords) j[multiset_name(a, mu)] = c.str();
    return j;
}

FPoly product_of_symbols(const BasedAlgebra& a, const std::vector<BasisWord>& words) {
    FPoly f(1);
    for (const auto& w : words) f *= Poly(a.t_symbol(w));
    return f;
}

std::vector<BasisWord> require_words(const BasedAlgebra& a, const Options& o) {
    if (o.words.empty()) throw UsageError("--words is required");
    return a.parse_words(o.words);
}

FPoly require_poly(const Options& o) {
    if (o.poly.empty()) throw UsageError("--poly is required");
    return parse_poly(o.poly);
}

// ------------------------------------------------------------ generic verbs

Report expand(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    const FPoly f = require_poly(o);
    const Tensor t = phi(a, o.n, f);
    Report r;
    const auto orbit = to_orbit_basis(a, t);
    const auto power = to_power_product_basis(a, t);
    r.payload["phi"] = render_tensor(a, t);
    r.payload["orbit_basis"] = coords_json(a, orbit);
    r.payload["power_products"] = coords_json(a, power);
    r.line("phi(f) = " + render_tensor(a, t));
    r.line("orbit sums: " + render_coords(a, orbit, false));
    r.line("power products: " + render_coords(a, power, true));
    return r;
}

Report psi_verb(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    const FPoly f = psi(a, o.n, require_words(a, o));
    Report r;
    r.ok = kernel_member(a, o.n, f);
    r.payload["psi"] = render(f);
    r.payload["phi_is_zero"] = r.ok;
    r.line(render(f));
    r.line(std::string("phi(psi) = ") + (r.ok ? "0" : "nonzero"));
    return r;
}

Report rewrite(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    const auto words = require_words(a, o);
    const auto normal = rewrite_product(a, o.n, make_multiset(words));
    const auto oracle = to_power_product_basis(a, phi(a, o.n, product_of_symbols(a, words)));
    Report r;
    r.ok = normal == oracle;
    r.payload["normal_form"] = coords_json(a, normal);
    r.payload["matches_direct_expansion"] = r.ok;
    r.line(render_coords(a, normal, true));
    if (!r.ok) r.line("direct expansion gives " + render_coords(a, oracle, true));
    return r;
}

Report reduce_word(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    const auto words = require_words(a, o);
    const FPoly g = reduce_long_word(a, o.n, words);
    AlgElement full;
    full.c0 = Rat(1);
    for (const auto& w : words) full = a.product(full, AlgElement::word(w));
    Report r;
    r.ok = phi(a, o.n, g) == phi(a, o.n, linearize(a, o.n, full));
    r.payload["reduced"] = render(g);
    r.payload["phi_matches"] = r.ok;
    r.line(render(g));
    return r;
}

Report kernel_test(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    const FPoly f = require_poly(o);
    const Tensor t = phi(a, o.n, f);
    Report r;
    r.ok = t.is_zero();
    r.payload["member"] = r.ok;
    r.payload["phi"] = render_tensor(a, t);
    r.line(std::string("in ker(phi): ") + (r.ok ? "yes" : "no"));
    if (!r.ok) r.line("phi(f) = " + render_tensor(a, t));
    return r;
}

Report mingen(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    if (!o.max_degree) throw UsageError("--max-degree is required");
    Report r;
    json rows = json::object();
    std::size_t total = 0;
    for (const auto& row : min_generator_report(a, o.n, *o.max_degree)) {
        json witnesses = json::array();
        std::string names;
        for (const auto& mu : row.witnesses) {
            witnesses.push_back(multiset_name(a, mu));
            names += (names.empty() ? "" : " ") + multiset_name(a, mu);
        }
        rows[std::to_string(row.degree)] = {{"dim", row.dim},
                                            {"decomposable_dim", row.decomposable_dim},
                                            {"indecomposable", row.indecomposable_count},
                                            {"witnesses", witnesses}};
        total += row.indecomposable_count;
        r.line("degree " + std::to_string(row.degree) + ": dim " + std::to_string(row.dim) + ", decomposable " +
               std::to_string(row.decomposable_dim) + ", indecomposable " + std::to_string(row.indecomposable_count) +
               (names.empty() ? "" : "  " + names));
    }
    r.payload["degrees"] = rows;
    r.payload["total_indecomposable"] = total;
    r.line("total indecomposable: " + std::to_string(total));
    return r;
}

Report trace_check(const Options& o) {
    Report r;
    r.payload["n"] = o.n;
    r.payload["mode"] = o.mode;
    if (o.n == 0) throw UsageError("--n must be positive");
    if (o.mode == "symbolic") {
        if (o.n > 3) throw UsageError("symbolic mode is limited to n <= 3; use --mode random");
        const auto ys = generic_matrices(o.n, o.n + 1);
        const Poly value = fundamental_identity<Poly>(o.n, std::span<const MatrixPoly>(ys));
        r.ok = value == Poly();
        r.payload["variables"] = (o.n + 1) * o.n * o.n;
        r.payload["identity_is_zero"] = r.ok;
        r.line("fundamental trace identity, n = " + std::to_string(o.n) + ", generic matrices: " +
               (r.ok ? "0" : render(value)));
    } else if (o.mode == "random") {
        std::mt19937_64 rng(o.seed);
        std::size_t nonzero = 0;
        for (unsigned t = 0; t < o.trials; ++t) {
            std::vector<RatMatrix> ys;
            for (unsigned i = 0; i <= o.n; ++i) ys.push_back(random_rational_matrix(o.n, rng));
            if (!fundamental_identity<Rat>(o.n, std::span<const RatMatrix>(ys)).is_zero()) ++nonzero;
        }
        r.ok = nonzero == 0;
        r.payload["seed"] = o.seed;
        r.payload["trials"] = o.trials;
        r.payload["nonzero"] = nonzero;
        r.line("fundamental trace identity, n = " + std::to_string(o.n) + ", " + std::to_string(o.trials) +
               " random rational tuples (seed " + std::to_string(o.seed) + "): " + std::to_string(nonzero) + " nonzero");
    } else {
        throw UsageError("--mode must be symbolic or random");
    }
    return r;
}

Rat json_rat(const json& v) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    throw UsageError("matrix entries must be integers or rational strings");
}

std::vector<RatMatrix> parse_matrices(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--matrices: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError("--matrices must be a non-empty array of square matrices");
    std::vector<RatMatrix> out;
    for (const auto& m : j) {
        if (!m.is_array() || m.empty()) throw UsageError("each matrix must be a non-empty array of rows");
        const auto size = static_cast<Eigen::Index>(m.size());
        RatMatrix mat(size, size);
        for (Eigen::Index i = 0; i < size; ++i) {
            const auto& row = m[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != size) throw UsageError("matrices must be square");
            for (Eigen::Index k = 0; k < size; ++k) mat(i, k) = json_rat(row[static_cast<std::size_t>(k)]);
        }
        out.push_back(std::move(mat));
    }
    return out;
}

Report gamma_check(const Options& o) {
    const auto a = BasedAlgebra::from_descriptor(o.algebra);
    if (o.words.empty() == o.poly.empty()) throw UsageError("give exactly one of --words (a syzygy) or --poly");
    std::vector<std::vector<RatMatrix>> points;
    if (!o.matrices.empty()) {
        points.push_back(parse_matrices(o.matrices));
    } else {
        std::mt19937_64 rng(o.seed);
        for (unsigned t = 0; t < o.trials; ++t) points.push_back(random_commuting_tuple(o.n, a.generator_count(), t % 2 == 0, rng));
    }
    Report r;
    json values = json::array();
    std::size_t nonzero = 0;
    for (const auto& point : points) {
        const unsigned size = static_cast<unsigned>(point.front().rows());
        const FPoly f = o.words.empty() ? parse_poly(o.poly) : psi(a, size, a.parse_words(o.words));
        const Rat value = gamma_evaluate(a, point, f);
        values.push_back(value.str());
        if (!value.is_zero()) ++nonzero;
    }
    if (!o.words.empty()) r.ok = nonzero == 0;
    if (o.matrices.empty()) {
        r.payload["seed"] = o.seed;
        r.payload["trials"] = o.trials;
    }
    r.payload["values"] = values;
    if (points.size() == 1) {
        r.line("gamma(f) = " + values.front().get<std::string>());
    } else {
        r.line(std::to_string(points.size()) + " commuting tuples (seed " + std::to_string(o.seed) + "): " +
               std::to_string(nonzero) + " nonzero values");
    }
    return r;
}

// ------------------------------------------------------------ s4 verbs

std::set<std::string> symbol_names() {
    std::set<std::string> names;
    for (const auto& s : s4::presentation_symbols()) names.insert(s.var.name());
    return names;
}

Report s4_verify(const Options& o) {
    auto relations = s4::relation_generators();
    for (const auto& spec : o.relations) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--relation expects NAME=POLY");
        const std::string name = spec.substr(0, eq);
        FPoly f = parse_poly(spec.substr(eq + 1), VariableContext::only(symbol_names()));
        const unsigned degree = f.terms().empty() ? 0 : s4::weighted_degree(f.terms().rbegin()->first);
        auto it = std::find_if(relations.begin(), relations.end(), [&](const auto& rel) { return rel.name == name; });
        if (it != relations.end())
            *it = s4::Relation{name, std::move(f), degree};
        else
            relations.push_back(s4::Relation{name, std::move(f), degree});
    }
    std::vector<s4::Relation> all = relations;
    for (const auto& rel : relations)
        if (rel.name != "S2") all.push_back(s4::Relation{"~" + rel.name, s4::eliminate_y3(rel.poly), rel.degree});

    Report r;
    json rows = json::array();
    for (const auto& rel : all) {
        const Poly image = s4::phi(rel.poly);
        const bool zero = image == Poly();
        r.ok = r.ok && zero;
        rows.push_back({{"name", rel.name}, {"degree", rel.degree}, {"phi_is_zero", zero}});
        r.line(rel.name + " (degree " + std::to_string(rel.degree) + "): phi = " + (zero ? "0" : render(image)));
    }
    r.payload["relations"] = rows;
    return r;
}

Report s4_kernel(const Options& o) {
    const unsigned d_max = o.max_degree.value_or(10);
    Report r;
    json rows = json::object();
    for (const auto& row : s4::kernel_report(d_max)) {
        json dropped = json::object();
        std::string drop_text;
        for (const auto& [name, dim] : row.dropped_ideal_dims) {
            dropped[name] = dim;
            r.ok = r.ok && dim < row.ideal_dim;
            drop_text += "; without " + name + ": " + std::to_string(dim);
        }
        r.ok = r.ok && row.match;
        json entry = {{"monomials", row.monomials}, {"kernel_dim", row.kernel_dim}, {"ideal_dim", row.ideal_dim}, {"match", row.match}};
        if (!dropped.empty()) entry["dropped"] = dropped;
        rows[std::to_string(row.degree)] = entry;
        r.line("degree " + std::to_string(row.degree) + ": monomials " + std::to_string(row.monomials) + ", kernel " +
               std::to_string(row.kernel_dim) + ", ideal " + std::to_string(row.ideal_dim) + (row.match ? "" : "  MISMATCH") +
               drop_text);
    }
    r.payload["degrees"] = rows;
    return r;
}

Report s4_mingen(const Options& o) {
    const unsigned d_max = o.max_degree.value_or(8);
    Report r;
    json rows = json::object();
    std::size_t total = 0;
    for (const auto& row : s4::min_generator_report(d_max)) {
        total += row.indecomposable_count;
        r.ok = r.ok && row.named_generators_complete;
        rows[std::to_string(row.degree)] = {{"dim", row.dim},
                                            {"decomposable_dim", row.decomposable_dim},
                                            {"indecomposable", row.indecomposable_count},
                                            {"named_generators_complete", row.named_generators_complete}};
        r.line("degree " + std::to_string(row.degree) + ": dim " + std::to_string(row.dim) + ", decomposable " +
               std::to_string(row.decomposable_dim) + ", indecomposable " + std::to_string(row.indecomposable_count));
    }
    const bool z6 = d_max >= 6 && s4::z6_is_decomposable();
    r.payload["degrees"] = rows;
    r.payload["total_indecomposable"] = total;
    if (d_max >= 6) r.payload["z6_decomposable"] = z6;
    r.line("total indecomposable: " + std::to_string(total));
    if (d_max >= 6) r.line(std::string("[z^6] decomposable: ") + (z6 ? "yes" : "no"));
    return r;
}

json fingerprint_json(const s4::Fingerprint& f) {
    json j = json::array();
    for (const auto& v : f) j.push_back(v.str());
    return j;
}

Report s4_fingerprint(const Options& o) {
    const auto g = s4::Graph4::parse(o.edges);
    const auto f = s4::fingerprint(g);
    Report r;
    r.payload["edges"] = g.str();
    json named = json::object();
    for (std::size_t i = 0; i < f.size(); ++i) named[s4::nine_generator_names()[i]] = f[i].str();
    r.payload["fingerprint"] = named;
    r.line("graph {" + g.str() + "}: " + s4::fingerprint_str(f));
    return r;
}

Report s4_graphs(const Options&) {
    const auto classes = s4::isomorphism_classes();
    Report r;
    r.ok = classes.equal;
    json rows = json::object();
    for (std::size_t i = 0; i < classes.by_fingerprint.size(); ++i) {
        json graphs = json::array();
        std::string text;
        for (const auto& g : classes.by_fingerprint[i]) {
            graphs.push_back(g.str());
            text += " {" + g.str() + "}";
        }
        rows[std::to_string(i)] = {{"graphs", graphs}, {"fingerprint", fingerprint_json(classes.fingerprints[i])}};
        r.line("class " + std::to_string(i) + " " + s4::fingerprint_str(classes.fingerprints[i]) + ":" + text);
    }
    r.payload["class_count"] = classes.by_fingerprint.size();
    r.payload["orbit_count"] = classes.by_orbit.size();
    r.payload["partitions_equal"] = classes.equal;
    r.payload["classes"] = rows;
    r.line(std::to_string(classes.by_fingerprint.size()) + " fingerprint classes, " + std::to_string(classes.by_orbit.size()) +
           " isomorphism classes, partitions " + (classes.equal ? "equal" : "differ"));
    return r;
}

void emit(const Report& r, const std::string& command, const Options& o, std::ostream& out) {
    if (o.json) {
        json j = {{"command", command}, {"status", r.ok ? "ok" : "fail"}};
        for (const auto& [k, v] : r.payload.items()) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : r.lines) out << l << "\n";
        out << "status: " << (r.ok ? "ok" : "fail") << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations in symmetric tensor powers of based algebras.", "multisym"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit a JSON report");
    app.add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--out", o.out, "Write the report to a file");

    auto algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "poly:m | veronese:m:q | table:<path>")->capture_default_str();
        sub->add_option("--n", o.n, "Tensor power")->capture_default_str()->check(CLI::PositiveNumber);
    };
    std::vector<std::pair<CLI::App*, std::function<Report(const Options&)>>> verbs;
    auto verb = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Report(const Options&)> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        verbs.emplace_back(sub, std::move(fn));
        return sub;
    };

    auto* e = verb(&app, "expand", "Image of an FPoly under phi, in both invariant bases", expand);
    algebra_opts(e);
    e->add_option("--poly", o.poly, "Polynomial in T symbols")->required();

    auto* p = verb(&app, "psi", "Master syzygy of n+1 basis words", psi_verb);
    algebra_opts(p);
    p->add_option("--words", o.words, "Comma-separated basis words")->required();

    auto* rw = verb(&app, "rewrite", "Normal form of a product of brackets", rewrite);
    algebra_opts(rw);
    rw->add_option("--words", o.words, "Comma-separated basis words")->required();

    auto* rd = verb(&app, "reduce-word", "Express [w1...w(n+1)] through shorter words", reduce_word);
    algebra_opts(rd);
    rd->add_option("--words", o.words, "The n+1 factors")->required();

    auto* kt = verb(&app, "kernel-test", "Whether an FPoly lies in ker(phi)", kernel_test);
    algebra_opts(kt);
    kt->add_option("--poly", o.poly, "Polynomial in T symbols")->required();

    auto* mg = verb(&app, "mingen", "Indecomposable invariants per degree", mingen);
    algebra_opts(mg);
    mg->add_option("--max-degree", o.max_degree, "Highest degree examined")->required();

    auto* tc = verb(&app, "trace-check", "Fundamental trace identity of n x n matrices", trace_check);
    tc->add_option("--n", o.n, "Matrix size")->capture_default_str()->check(CLI::PositiveNumber);
    tc->add_option("--mode", o.mode, "symbolic | random")->capture_default_str();
    tc->add_option("--trials", o.trials, "Random tuples")->capture_default_str();

    auto* gc = verb(&app, "gamma-check", "Evaluate T_w -> Tr(w(M)) at commuting matrices", gamma_check);
    algebra_opts(gc);
    gc->add_option("--words", o.words, "Check the syzygy of these words vanishes");
    gc->add_option("--poly", o.poly, "Evaluate this FPoly");
    gc->add_option("--matrices", o.matrices, "JSON array of matrices with rational-string entries");
    gc->add_option("--trials", o.trials, "Random commuting tuples when --matrices is absent")->capture_default_str();

    auto* s4 = app.add_subcommand("s4", "The S_4 action on pairs of {1,2,3,4}");
    s4->require_subcommand(1);
    s4->fallthrough();
    auto* vr = verb(s4, "verify-relations", "phi of the six relations and their substitutes", s4_verify);
    vr->add_option("--relation", o.relations, "Replace or add a relation: NAME=POLY");
    auto* kr = verb(s4, "kernel", "Compare ker(phi) with the relation ideal per degree", s4_kernel);
    kr->add_option("--max-degree", o.max_degree, "Highest degree (default 10)");
    auto* sm = verb(s4, "mingen", "Indecomposables of the invariant ring per degree", s4_mingen);
    sm->add_option("--max-degree", o.max_degree, "Highest degree (default 8)");
    auto* fp = verb(s4, "fingerprint", "Generator values of a 4-vertex graph", s4_fingerprint);
    fp->add_option("--edges", o.edges, "Edge list such as \"12,34\"")->required();
    verb(s4, "graphs", "Fingerprint classes of all 64 labelled graphs", s4_graphs);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex, out, err) == 0 ? kOk : kUsage;
    }

    for (const auto& [sub, fn] : verbs) {
        if (!sub->parsed()) continue;
        std::string command = sub->get_name();
        if (sub->get_parent() != &app) command = sub->get_parent()->get_name() + " " + command;
        try {
            const Report report = fn(o);
            if (o.out.empty()) {
                emit(report, command, o, out);
            } else {
                std::ofstream file(o.out);
                if (!file) {
                    err << "error: cannot write " << o.out << "\n";
                    return kUsage;
                }
                emit(report, command, o, file);
            }
            return report.ok ? kOk : kFail;
        } catch (const UsageError& ex) {
            err << "error: " << ex.what() << "\n";
            return kUsage;
        } catch (const Error& ex) {
            err << "error: " << ex.what() << "\n";
            return kUsage;
        }
    }
    return kUsage;
}

}  // namespace multisym::cli
