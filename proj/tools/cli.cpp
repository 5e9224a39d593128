#include "cli.hpp"

#include "frobflag/charp.hpp"
#include "frobflag/errors.hpp"
#include "frobflag/frobdecomp.hpp"
#include "frobflag/mutation.hpp"
#include "frobflag/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace frobflag::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Outcome {
    std::optional<RootType> type;
    std::optional<int> p;
    std::optional<int> n;
    Table table;
    Json extra = Json::object();
    Json verdicts = Json::object();
    int exit_code = kExitOk;
};

// --- formatting ------------------------------------------------------------

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) os << ',';
            os << csv_field(cells[k]);
        }
        os << '\n';
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

std::string render_table(const Outcome& o) {
    const Table& t = o.table;
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t k = 0; k < t.columns.size(); ++k) width[k] = t.columns[k].size();
    for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) os << "  ";
            os << cells[k];
            if (k + 1 < cells.size()) os << std::string(width[k] - cells[k].size(), ' ');
        }
        os << '\n';
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : t.rows) line(r);
    for (const auto& [name, value] : o.verdicts.items()) {
        os << name << ": " << (value.is_boolean() ? (value.get<bool>() ? "pass" : "FAIL") : value.dump())
           << '\n';
    }
    return os.str();
}

std::string render_json(const std::string& command, const std::vector<std::string>& args,
                        const Outcome& o) {
    Json env;
    env["command"] = command;
    env["argv"] = args;
    env["type"] = o.type ? Json(std::string(to_string(*o.type))) : Json(nullptr);
    env["p"] = o.p ? Json(std::to_string(*o.p)) : Json(nullptr);
    env["n"] = o.n ? Json(std::to_string(*o.n)) : Json(nullptr);
    Json payload = Json::object();
    payload["columns"] = o.table.columns;
    Json rows = Json::array();
    for (const auto& r : o.table.rows) {
        Json row = Json::object();
        for (std::size_t k = 0; k < r.size(); ++k) row[o.table.columns[k]] = r[k];
        rows.push_back(std::move(row));
    }
    payload["rows"] = std::move(rows);
    for (const auto& [k, v] : o.extra.items()) payload[k] = v;
    env["payload"] = std::move(payload);
    env["verdicts"] = o.verdicts;
    return env.dump(2) + "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string describe(const BottResult& r) {
    if (std::holds_alternative<Singular>(r)) return "Singular";
    const auto& c = std::get<Concentrated>(r);
    return "Concentrated{degree " + std::to_string(c.degree) + ", dominant (" + to_string(c.dominant) + ")}";
}

KClass resolve_class(RootType t, const std::string& text) {
    try {
        return KClass::parse(text);
    } catch (const ParseError&) {
        return bundle_dictionary(t, text).kclass;
    }
}

void check_verdicts(Outcome& o) {
    for (const auto& [name, value] : o.verdicts.items()) {
        if (value.is_boolean() && !value.get<bool>()) o.exit_code = kExitVerificationFailed;
    }
}

// --- commands --------------------------------------------------------------

struct Options {
    std::string type = "A2";
    std::string weight;
    std::vector<std::string> classes;
    std::vector<std::string> through;
    std::string side = "right";
    std::string space = "P3";
    std::string over = "weights";
    std::optional<int> p;
    int n = 1;
    std::int64_t range = 4;
    int max_depth = 20;
    std::vector<int> primes{2, 3, 5, 7};
    std::vector<int> ns{1};
    bool serial = false;
};

Outcome cmd_cohomology(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    const Weight w = parse_weight(opt.weight);
    o.type = t;
    const BottResult bott = bott_resolve(t, w);
    const BigInt chi = euler_line(t, w);
    o.table.columns = {"weight", "bott", "euler"};
    std::vector<std::string> row{to_string(w), describe(bott), chi.str()};
    if (opt.p) {
        const FrobeniusParams fp(*opt.p, opt.n);
        o.p = fp.p;
        o.n = fp.n;
        const CharpStatus status = resolve_charp(t, w, fp, {opt.max_depth});
        o.table.columns.insert(o.table.columns.end(),
                               {"status", "h1_nonzero", "bottom_alcove_interior"});
        row.push_back(to_string(status));
        row.push_back(yes_no(h1_nonzero(t, w, fp)));
        const auto* c = std::get_if<Concentrated>(&bott);
        row.push_back(yes_no(c && bottom_alcove_interior(t, c->dominant, fp)));
        if (const auto* k = std::get_if<Known>(&status)) {
            BigInt d = weyl_dim(t, k->dominant);
            o.verdicts["known_matches_euler"] = (k->degree % 2 == 0 ? d : BigInt(-d)) == chi;
        }
    }
    o.table.rows.push_back(std::move(row));
    return o;
}

Outcome cmd_euler(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    o.type = t;
    KClass c;
    if (!opt.weight.empty()) {
        c = KClass::line(parse_weight(opt.weight));
    } else if (opt.classes.size() == 1) {
        c = resolve_class(t, opt.classes.front());
    } else {
        throw InvalidParameter("euler needs --weight or exactly one --class");
    }
    o.table.columns = {"class", "rank", "euler"};
    o.table.rows.push_back({c.to_string(), c.rank().str(), euler_char(t, c).str()});
    return o;
}

Outcome cmd_pair(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    o.type = t;
    if (opt.classes.size() != 2) throw InvalidParameter("pair needs exactly two --class arguments");
    const KClass a = resolve_class(t, opt.classes[0]);
    const KClass b = resolve_class(t, opt.classes[1]);
    o.table.columns = {"a", "b", "chi(a,b)", "chi(b,a)"};
    o.table.rows.push_back({a.to_string(), b.to_string(), euler_pairing(t, a, b).str(),
                            euler_pairing(t, b, a).str()});
    return o;
}

Outcome cmd_mutate(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    o.type = t;
    if (opt.classes.size() != 1) throw InvalidParameter("mutate needs exactly one --class");
    MutationSide side;
    if (opt.side == "left") {
        side = MutationSide::left;
    } else if (opt.side == "right") {
        side = MutationSide::right;
    } else {
        throw ParseError("--side must be left or right");
    }
    const KClass e = resolve_class(t, opt.classes.front());
    std::vector<KClass> block;
    std::string through;
    for (const auto& s : opt.through) {
        block.push_back(resolve_class(t, s));
        through += (through.empty() ? "" : "; ") + block.back().to_string();
    }
    const KClass result = mutate_through_block(side, e, block, t);
    o.table.columns = {"side", "class", "through", "result", "rank"};
    o.table.rows.push_back({opt.side, e.to_string(), through, result.to_string(), result.rank().str()});
    return o;
}

Outcome cmd_dual_collection(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    o.type = t;
    const ExcCollection c = builtin_collection(t);
    const auto duals = right_dual_collection_k(c);
    const auto expected = expected_dual_blocks(t);

    o.table.columns = {"source", "block_degree", "shift", "dual", "rank", "matches", "summand"};
    bool blocks_match = true;
    std::vector<std::vector<bool>> used(expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) used[k].assign(expected[k].size(), false);
    for (const auto& d : duals) {
        const auto& names = expected[static_cast<std::size_t>(d.block_degree)];
        auto& taken = used[static_cast<std::size_t>(d.block_degree)];
        std::string match = "-";
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (!taken[k] && kclass_equal(t, d.normalized, bundle_dictionary(t, names[k]).kclass)) {
                taken[k] = true;
                match = names[k];
                break;
            }
        }
        blocks_match = blocks_match && match != "-";
        o.table.rows.push_back({d.source, std::to_string(d.block_degree),
                                d.block_degree == 0 ? std::string("[0]") : "[-" + std::to_string(d.block_degree) + "]", d.normalized.to_string(),
                                d.normalized.rank().str(), match, d.normalized.dual().to_string()});
    }
    const auto disagreements = dual_reading_disagreements(c);
    bool helix_ok = true;
    for (const auto& h : helix_check(c)) helix_ok = helix_ok && h.ok;
    o.extra["reading_disagreements"] = disagreements;
    o.verdicts["duals_match_expected_blocks"] = blocks_match;
    o.verdicts["readings_agree"] = disagreements.empty();
    o.verdicts["helix_thread"] = helix_ok;
    check_verdicts(o);
    return o;
}

Outcome cmd_verify_sod(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    o.type = t;
    const SodReport r = verify_sod_euler(builtin_collection(t));
    o.table.columns = {"kind", "first", "second", "chi", "expected", "ok"};
    auto emit = [&](const char* kind, const std::vector<PairCheck>& checks) {
        bool all = true;
        for (const auto& pc : checks) {
            o.table.rows.push_back({kind, r.names[pc.row], r.names[pc.col], pc.value.str(),
                                    pc.expected.str(), yes_no(pc.ok)});
            all = all && pc.ok;
        }
        return all;
    };
    o.verdicts["diagonal"] = emit("diagonal", r.diagonal);
    o.verdicts["lower_triangular"] = emit("lower", r.lower_triangular);
    o.verdicts["within_block"] = emit("within_block", r.within_block);
    Json gram = Json::array();
    for (const auto& row : r.gram) {
        Json jr = Json::array();
        for (const auto& v : row) jr.push_back(v.str());
        gram.push_back(std::move(jr));
    }
    o.extra["names"] = r.names;
    o.extra["gram"] = std::move(gram);
    check_verdicts(o);
    return o;
}

Outcome cmd_frobenius(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    if (!opt.p) throw InvalidParameter("frobenius needs --p");
    const FrobeniusParams fp(*opt.p, opt.n);
    o.type = t;
    o.p = fp.p;
    o.n = fp.n;
    const DecompositionReport r = decomposition_report(t, fp);
    o.table.columns = {"summand", "source", "block_degree", "rank", "multiplicity",
                       "solver_multiplicity", "zero_flag", "formula", "formula_value", "formula_match"};
    Json mults = Json::array();
    bool formulas = true;
    for (const auto& s : r.summands) {
        o.table.rows.push_back({s.summand.name, s.summand.source, std::to_string(s.summand.block_degree),
                                s.summand.rank.str(), s.multiplicity.str(),
                                to_decimal(s.solver_multiplicity), yes_no(s.zero_multiplicity),
                                s.closed_form.formula, s.closed_form.value.str(), yes_no(s.closed_form.match)});
        mults.push_back(s.multiplicity.str());
        formulas = formulas && s.closed_form.match;
    }
    o.extra["q"] = std::to_string(r.q);
    o.extra["multiplicities"] = std::move(mults);
    o.extra["total_rank"] = r.total_rank.str();
    o.extra["expected_rank"] = r.expected_rank.str();
    Json notes = Json::array();
    for (const auto& s : r.summands) {
        if (!s.closed_form.note.empty()) notes.push_back(s.summand.name + ": " + s.closed_form.note);
    }
    o.extra["notes"] = std::move(notes);
    o.verdicts["rank_identity_ok"] = r.rank_identity_ok;
    o.verdicts["routes_agree"] = r.routes_agree;
    o.verdicts["pairing_identity_ok"] = r.pairing_identity_ok;
    check_verdicts(o);
    // Formula comparison is informational and never changes the exit code.
    o.verdicts["closed_forms_match"] = Json(formulas ? "all" : "mismatch");
    return o;
}

Outcome cmd_pushforward(const Options& opt) {
    Outcome o;
    if (!opt.p) throw InvalidParameter("pushforward needs --p");
    const FrobeniusParams fp(*opt.p, opt.n);
    o.p = fp.p;
    o.n = fp.n;
    const PushforwardResult r = projective_pushforward_solve(parse_projective_space(opt.space), fp);
    o.table.columns = {"summand", "rank", "multiplicity"};
    Json mults = Json::array();
    for (std::size_t k = 0; k < r.multiplicities.size(); ++k) {
        o.table.rows.push_back({r.summand_names[k], r.ranks[k].str(), r.multiplicities[k].str()});
        mults.push_back(r.multiplicities[k].str());
    }
    o.extra["space"] = std::string(to_string(r.space));
    o.extra["multiplicities"] = std::move(mults);
    o.extra["total_rank"] = r.total_rank.str();
    o.verdicts["rank_sum_ok"] = true;
    return o;
}

Outcome cmd_table(const Options& opt) {
    Outcome o;
    const RootType t = parse_root_type(opt.type);
    o.type = t;
    const Execution ex = opt.serial ? Execution::serial : Execution::parallel;
    if (opt.over == "weights") {
        WeightGridRequest req{t, opt.range, std::nullopt, {opt.max_depth}};
        if (opt.p) {
            req.fp = FrobeniusParams(*opt.p, opt.n);
            o.p = opt.p;
            o.n = opt.n;
        }
        o.table.columns = {"weight", "bott", "euler"};
        if (req.fp) o.table.columns.insert(o.table.columns.end(), {"status", "h1_nonzero"});
        bool consistent = true;
        for (const auto& cell : weight_grid(req, ex)) {
            std::vector<std::string> row{to_string(cell.weight), describe(cell.bott), cell.euler.str()};
            if (cell.charp) {
                row.push_back(to_string(*cell.charp));
                row.push_back(yes_no(*cell.h1_nonzero));
                if (const auto* k = std::get_if<Known>(&*cell.charp)) {
                    BigInt d = weyl_dim(t, k->dominant);
                    consistent = consistent && (k->degree % 2 == 0 ? d : BigInt(-d)) == cell.euler;
                }
            }
            o.table.rows.push_back(std::move(row));
        }
        if (req.fp) o.verdicts["known_matches_euler"] = consistent;
    } else if (opt.over == "pn") {
        o.table.columns = {"p", "n", "q", "status", "multiplicities", "total_rank", "rank_identity_ok"};
        bool all = true;
        for (const auto& cell : frobenius_sweep(t, opt.primes, opt.ns, ex)) {
            std::vector<std::string> row{std::to_string(cell.p), std::to_string(cell.n)};
            if (cell.report) {
                const auto& r = *cell.report;
                std::string mults;
                for (const auto& s : r.summands) mults += (mults.empty() ? "" : " ") + s.multiplicity.str();
                row.insert(row.end(), {std::to_string(r.q), r.verified() ? "verified" : "unverified", mults,
                                       r.total_rank.str(), yes_no(r.rank_identity_ok)});
                all = all && r.verified();
            } else {
                row.insert(row.end(), {"-", cell.error_kind, "", "", "false"});
                all = false;
            }
            o.table.rows.push_back(std::move(row));
        }
        o.verdicts["all_cells_verified"] = all;
    } else {
        throw ParseError("--over must be weights or pn");
    }
    check_verdicts(o);
    return o;
}

int exit_code_for(const Error& e) {
    const std::string kind = e.kind();
    if (kind == "ConcentrationViolated" || kind == "MultiplicityMismatch" ||
        kind == "NegativeMultiplicity" || kind == "SingularSystem") {
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact K-theoretic and cohomological computations on rank-2 flag varieties", "frobflag"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "table";
    std::string out_path;
    int p_value = 0;

    auto add_common = [&](CLI::App* sub, bool with_type = true) {
        if (with_type) {
            sub->add_option("--type", opt.type, "Root system type: A2, B2 or G2")->capture_default_str();
        }
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    };
    auto add_pn = [&](CLI::App* sub) {
        sub->add_option("--p", p_value, "Characteristic (prime)");
        sub->add_option("--n", opt.n, "Frobenius power")->capture_default_str();
    };

    std::map<CLI::App*, std::function<Outcome(const Options&)>> handlers;

    auto* coh = app.add_subcommand("cohomology", "Bott resolution, or char-p status when --p is given");
    add_common(coh);
    add_pn(coh);
    coh->add_option("--weight", opt.weight, "Weight literal a,b")->required();
    coh->add_option("--max-depth", opt.max_depth, "Recursion search depth")->capture_default_str();
    handlers[coh] = cmd_cohomology;

    auto* eul = app.add_subcommand("euler", "Euler characteristic of a line bundle or class");
    add_common(eul);
    eul->add_option("--weight", opt.weight, "Weight literal a,b");
    eul->add_option("--class", opt.classes, "Class literal or bundle name");
    handlers[eul] = cmd_euler;

    auto* pr = app.add_subcommand("pair", "Euler pairing chi(a, b)");
    add_common(pr);
    pr->add_option("--class", opt.classes, "Two class literals or bundle names")->required();
    handlers[pr] = cmd_pair;

    auto* mu = app.add_subcommand("mutate", "Mutation of a class through an orthogonal block");
    add_common(mu);
    mu->add_option("--class", opt.classes, "Class to mutate")->required();
    mu->add_option("--through", opt.through, "Block members (repeatable)");
    mu->add_option("--side", opt.side, "left or right")->capture_default_str();
    handlers[mu] = cmd_mutate;

    auto* dc = app.add_subcommand("dual-collection", "Right dual of the builtin collection");
    add_common(dc);
    handlers[dc] = cmd_dual_collection;

    auto* vs = app.add_subcommand("verify-sod", "Euler-level semiorthogonality of the builtin collection");
    add_common(vs);
    handlers[vs] = cmd_verify_sod;

    auto* fr = app.add_subcommand("frobenius", "Decomposition of F^n_* O with multiplicities");
    add_common(fr);
    add_pn(fr);
    handlers[fr] = cmd_frobenius;

    auto* pf = app.add_subcommand("pushforward", "F^n_* O on P3 or Q3");
    add_common(pf, false);
    add_pn(pf);
    pf->add_option("--space", opt.space, "P3 or Q3")->capture_default_str();
    handlers[pf] = cmd_pushforward;

    auto* tb = app.add_subcommand("table", "Sweep over a weight grid or over (p, n) cells");
    add_common(tb);
    add_pn(tb);
    tb->add_option("--over", opt.over, "weights or pn")->capture_default_str();
    tb->add_option("--range", opt.range, "Weight grid half-width R")->capture_default_str();
    tb->add_option("--max-depth", opt.max_depth, "Recursion search depth")->capture_default_str();
    tb->add_option("--primes", opt.primes, "Primes for --over pn")->delimiter(',');
    tb->add_option("--ns", opt.ns, "Frobenius powers for --over pn")->delimiter(',');
    tb->add_flag("--serial", opt.serial, "Use the serial reference kernels");
    handlers[tb] = cmd_table;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "frobflag: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    if (auto* o = chosen->get_option_no_throw("--p"); o && o->count() > 0) opt.p = p_value;

    Outcome outcome;
    try {
        outcome = handlers.at(chosen)(opt);
    } catch (const Error& e) {
        err << "frobflag: " << e.kind() << ": " << e.what() << "\n";
        return exit_code_for(e);
    }

    std::string text;
    if (format == "json") {
        text = render_json(chosen->get_name(), args, outcome);
    } else if (format == "csv") {
        text = render_csv(outcome.table);
    } else {
        text = render_table(outcome);
    }
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "frobflag: cannot write " << out_path << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return outcome.exit_code;
}

} // namespace frobflag::cli
