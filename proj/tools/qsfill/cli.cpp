#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsfill/catalog.hpp"
#include "qsfill/config.hpp"
#include "qsfill/enumerate.hpp"
#include "qsfill/errors.hpp"
#include "qsfill/hj.hpp"
#include "qsfill/serialize.hpp"
#include "qsfill/verify.hpp"

#ifndef QSFILL_VERSION
#define QSFILL_VERSION "0.0.0"
#endif
#ifndef QSFILL_DEFAULT_GOLDEN
#define QSFILL_DEFAULT_GOLDEN ""
#endif

namespace qsfill::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    bool dot = false;
    int caps = -1;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::string golden;
    std::string manifest;
    bool witness = false;
    std::string stage = "compactify";
};

// What a subcommand produced.  `canonical` is what --json prints and what
// the manifest digest covers.
struct Output {
    std::string text;
    json canonical;
    std::string dot;
    int status = kOk;
    std::string note;  // stderr
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON or a path to a JSON file.
std::string json_argument(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    return read_file(arg);
}

int effective_caps(const Options& o) {
    if (o.caps >= 0) return o.caps;
    const char* env = std::getenv(kCapsEnv);
    if (!env || !*env) return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 1000) throw UsageError(std::string(kCapsEnv) + " must be an integer in [0, 1000]");
    return static_cast<int>(v);
}

SearchCaps make_caps(const Options& o) {
    SearchCaps c;
    c.max_blowups = effective_caps(o);
    c.shuffle_seed = o.seed;
    c.threads = std::max(1u, o.threads);
    return c;
}

std::string graph_text(const WeightedGraph& g) {
    std::ostringstream os;
    for (const auto& v : g.vertices) {
        os << v.name << " " << v.weight;
        if (v.kind == CurveKind::CuspidalRational) os << " cusp";
        os << "\n";
    }
    for (const auto& e : g.edges) {
        os << e.u << " -- " << e.v;
        if (e.multiplicity != 1) os << " x" << e.multiplicity;
        os << "\n";
    }
    for (const auto& m : g.markers) {
        os << m.kind << ":";
        for (const auto& c : m.curves) os << " " << c;
        os << "\n";
    }
    return os.str();
}

Output graph_output(const WeightedGraph& g, const std::string& title) {
    return {graph_text(g), json::parse(to_json(g)), to_dot(g, title), kOk, {}};
}

Output cmd_hj(std::int64_t n, std::int64_t q) {
    auto e = hj_expand(n, q);
    auto d = hj_dual(n, q);
    Output o;
    o.canonical = json::parse(hj_json(n, q));
    o.text = std::to_string(n) + "/" + std::to_string(q) + " = " + e.str() + "\n" + "dual " + std::to_string(n) + "/" +
             std::to_string(n - q) + " = " + d.str() + "\n";
    return o;
}

Output cmd_transform(const SingularityId& s) {
    auto trace = cusp_transform_trace(s);
    auto plan = transform_plan(s);
    const Configuration& z = trace.back();
    Output o;
    std::ostringstream os;
    for (const auto& step : plan.steps) os << "step " << step.str() << "\n";
    for (const auto& c : z.curves) os << c.name << " " << z.self(c.name) << " " << to_string(c.role) << "\n";
    auto g = z.graph();
    for (const auto& e : g.edges) os << e.u << " -- " << e.v << (e.multiplicity != 1 ? " x" + std::to_string(e.multiplicity) : "") << "\n";
    o.text = os.str();
    json j;
    j["singularity"] = s.str();
    j["steps"] = json::array();
    for (const auto& step : plan.steps) j["steps"].push_back(step.str());
    j["configuration"] = json::parse(to_json(z));
    o.canonical = j;
    o.dot = to_dot(z, s.str());
    return o;
}

Output cmd_enumerate(const SingularityId& s, const Options& opt) {
    auto r = search_fillings(s, make_caps(opt));
    Output o;
    std::ostringstream os;
    json arr = json::array();
    for (const auto& f : r.fillings) {
        os << f.descriptor.str() << "\n";
        if (opt.witness)
            for (const auto& st : f.witness.steps) os << "  " << st.str() << "\n";
        json d = json::parse(to_json(f.descriptor));
        if (opt.witness) arr.push_back({{"descriptor", d}, {"witness", json::parse(to_json(f.witness))}});
        else arr.push_back(d);
    }
    o.text = os.str();
    o.canonical = arr;
    if (!r.complete) {
        o.status = kCapsExhausted;
        o.note = "search incomplete (" + r.incomplete_reason + "); " + std::to_string(r.fillings.size()) + " filling(s) so far";
    }
    return o;
}

Output cmd_verify(const std::string& arg, const Options& opt) {
    auto d = descriptor_from_json(json_argument(arg));
    auto w = verify_filling(d, make_caps(opt));
    Output o;
    std::ostringstream os;
    os << "verified " << d.str() << " from " << to_string(w.model) << "\n";
    for (const auto& st : w.steps) os << "  " << st.str() << "\n";
    o.text = os.str();
    o.canonical = {{"descriptor", json::parse(to_json(d))}, {"witness", json::parse(to_json(w))}};
    o.dot = to_dot(witness_configuration(w), d.singularity.str());
    return o;
}

Output cmd_export_dot(const std::string& arg, const Options& opt) {
    // a JSON graph or configuration, or a singularity id plus --stage
    auto first = arg.find_first_not_of(" \t\r\n");
    bool inline_json = first != std::string::npos && arg[first] == '{';
    if (inline_json || arg.find(':') == std::string::npos) {
        std::string text = json_argument(arg);
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw DomainError(std::string("malformed JSON: ") + e.what());
        }
        if (j.contains("lattice")) {
            auto c = configuration_from_json(text);
            return {{}, json::parse(to_json(c)), to_dot(c), kOk, {}};
        }
        auto g = graph_from_json(text);
        return {{}, json::parse(to_json(g)), to_dot(g), kOk, {}};
    }
    auto s = SingularityId::parse(arg);
    if (opt.stage == "resolve") return graph_output(resolution_graph(s), s.str());
    if (opt.stage == "compactify") return graph_output(compactifying_divisor(s), s.str());
    if (opt.stage == "normalize") return graph_output(normalize_central(s), s.str());
    if (opt.stage == "transform") return cmd_transform(s);
    throw UsageError("--stage must be resolve, compactify, normalize or transform");
}

struct Golden {
    std::string id;
    std::vector<int> rows;
    std::vector<FillingDescriptor> expected;
    std::vector<FillingDescriptor> known_extra;
};

std::vector<Golden> load_golden(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw DomainError("golden file: " + std::string(e.what()));
    }
    std::vector<Golden> out;
    for (const auto& [id, row] : j.items()) {
        Golden g;
        g.id = id;
        g.rows = row.value("rows", std::vector<int>{});
        g.expected = descriptors_from_json(row.at("descriptors").dump());
        if (row.contains("known_extra")) g.known_extra = descriptors_from_json(row.at("known_extra").dump());
        sort_descriptors(g.expected);
        sort_descriptors(g.known_extra);
        out.push_back(std::move(g));
    }
    return out;
}

Output cmd_selftest(const Options& opt) {
    std::string path = opt.golden;
    if (path.empty())
        if (const char* env = std::getenv(kGoldenEnv); env && *env) path = env;
    if (path.empty()) path = QSFILL_DEFAULT_GOLDEN;
    if (path.empty()) throw UsageError("no golden file; pass --golden <path>");
    auto rows = load_golden(path);
    SearchCaps caps = make_caps(opt);
    Output o;
    std::ostringstream os;
    json results = json::array();
    int failed = 0, known = 0;
    for (const auto& g : rows) {
        auto r = search_fillings(SingularityId::parse(g.id), caps);
        auto got = r.descriptors();
        std::vector<FillingDescriptor> want = g.expected;
        want.insert(want.end(), g.known_extra.begin(), g.known_extra.end());
        sort_descriptors(want);
        std::string status;
        if (!r.complete) status = "INCOMPLETE";
        else if (got == g.expected) status = "PASS";
        else if (!g.known_extra.empty() && got == want) status = "KNOWN";
        else status = "FAIL";
        // every emitted filling must also replay
        if (status == "PASS" || status == "KNOWN") {
            for (const auto& f : r.fillings) {
                try {
                    if (!(replay_witness(f.witness) == f.descriptor)) status = "FAIL";
                } catch (const DomainError&) {
                    status = "FAIL";
                }
            }
        }
        if (status == "FAIL" || status == "INCOMPLETE") ++failed;
        if (status == "KNOWN") ++known;
        std::string rows;
        for (std::size_t i = 0; i < g.rows.size(); ++i) rows += (i ? "," : "") + std::to_string(g.rows[i]);
        os << std::left << std::setw(11) << status << std::setw(9) << g.id << " rows " << rows << "  " << got.size() << "/"
           << g.expected.size() << "\n";
        if (status == "FAIL") {
            for (const auto& d : g.expected) os << "    want " << d.str() << "\n";
            for (const auto& d : got) os << "    got  " << d.str() << "\n";
        }
        results.push_back({{"id", g.id}, {"status", status}, {"found", got.size()}, {"expected", g.expected.size()}});
    }
    os << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " rows pass";
    if (known) os << " (" << known << " with a documented extra)";
    os << "\n";
    o.text = os.str();
    o.canonical = {{"rows", results}, {"failed", failed}};
    if (failed) o.status = kFailure;
    return o;
}

void write_manifest(const Options& opt, const std::vector<std::string>& args, const Output& o, double wall_ms) {
    std::string canonical = o.canonical.dump();
    json m;
    m["command"] = args.empty() ? "" : args.front();
    m["arguments"] = args;
    m["catalog_version"] = QSFILL_VERSION;
    m["caps"] = effective_caps(opt);
    m["wall_time_ms"] = wall_ms;
    m["result_digest"] = digest(canonical);
    m["status"] = o.status;
    std::ofstream f(opt.manifest, std::ios::binary);
    if (!f) throw DomainError("cannot write manifest '" + opt.manifest + "'");
    f << m.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal symplectic fillings of quotient surface singularity links"};
    app.set_version_flag("--version", QSFILL_VERSION);
    app.require_subcommand(1, 1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool dot) {
        sub->add_flag("--json", opt.json, "JSON output");
        if (dot) sub->add_flag("--dot", opt.dot, "DOT output");
        sub->add_option("--manifest", opt.manifest, "Write a run manifest (JSON) to this path");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--caps", opt.caps, "Maximum number of blow-ups (default: derived bound, or $QSFILL_CAPS)")
            ->check(CLI::Range(0, 1000));
        sub->add_option("--seed", opt.seed, "Shuffle the search order with this seed");
        sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1, 256));
    };

    std::int64_t hj_n = 0, hj_q = 0;
    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of n/q and its dual");
    hj->add_option("n", hj_n)->required();
    hj->add_option("q", hj_q)->required();
    add_common(hj, false);

    std::string id;
    auto* resolve = app.add_subcommand("resolve", "Minimal resolution graph");
    resolve->add_option("id", id, "A:n,q D:n,q T:m O:m I:m")->required();
    add_common(resolve, true);

    auto* compactify = app.add_subcommand("compactify", "Compactifying divisor");
    compactify->add_option("id", id)->required();
    add_common(compactify, true);

    auto* transform = app.add_subcommand("transform", "Cusp transformation of the compactifying divisor");
    transform->add_option("id", id)->required();
    add_common(transform, true);

    auto* enumerate = app.add_subcommand("enumerate", "List minimal fillings");
    enumerate->add_option("id", id)->required();
    enumerate->add_flag("--witness", opt.witness, "Include blow-up witnesses");
    add_common(enumerate, false);
    add_search(enumerate);

    std::string target;
    auto* verify = app.add_subcommand("verify", "Replay a witness for a descriptor (JSON text or file)");
    verify->add_option("descriptor", target)->required();
    add_common(verify, true);
    add_search(verify);

    auto* export_dot = app.add_subcommand("export-dot", "DOT for an id, a graph JSON or a configuration JSON");
    export_dot->add_option("input", target)->required();
    export_dot->add_option("--stage", opt.stage, "resolve, compactify, normalize or transform (ids only)");

    auto* selftest = app.add_subcommand("selftest", "Run the golden catalog");
    selftest->add_option("--golden", opt.golden, "Golden fixture (default: $QSFILL_GOLDEN or the bundled file)");
    add_common(selftest, false);
    add_search(selftest);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (opt.json && opt.dot) throw UsageError("--json and --dot are exclusive");
        Output o;
        bool dot_only = false;
        if (hj->parsed()) o = cmd_hj(hj_n, hj_q);
        else if (resolve->parsed()) o = graph_output(resolution_graph(SingularityId::parse(id)), id);
        else if (compactify->parsed()) o = graph_output(compactifying_divisor(SingularityId::parse(id)), id);
        else if (transform->parsed()) o = cmd_transform(SingularityId::parse(id));
        else if (enumerate->parsed()) o = cmd_enumerate(SingularityId::parse(id), opt);
        else if (verify->parsed()) o = cmd_verify(target, opt);
        else if (export_dot->parsed()) {
            o = cmd_export_dot(target, opt);
            dot_only = true;
        } else if (selftest->parsed()) o = cmd_selftest(opt);

        if (dot_only || opt.dot) out << o.dot;
        else if (opt.json) out << o.canonical.dump(2) << "\n";
        else out << o.text;
        if (!o.note.empty()) err << o.note << "\n";

        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (!opt.manifest.empty()) write_manifest(opt, args, o, ms);
        return o.status;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const CapsExhausted& e) {
        err << "caps exhausted: " << e.what() << "\n";
        return kCapsExhausted;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

}  // namespace qsfill::cli
