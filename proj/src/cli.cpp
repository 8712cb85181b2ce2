#include "lrsk/cli.hpp"

#include "lrsk/error.hpp"
#include "lrsk/fixtures.hpp"
#include "lrsk/io.hpp"
#include "lrsk/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

namespace lrsk::cli {

using nlohmann::json;

namespace {

// Raised when a sweep or the demo finds a mismatch.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::string input = "-";
    std::string output = "-";
    bool pretty = false;

    std::string read_input() const {
        if (input == "-")
            return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        std::ifstream file(input, std::ios::binary);
        if (!file)
            throw Error("cannot open input file " + input);
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    void write(const std::function<void(std::ostream&)>& body) const {
        if (output == "-") {
            body(out);
            out.flush();
            return;
        }
        std::ofstream file(output, std::ios::binary);
        if (!file)
            throw Error("cannot open output file " + output);
        body(file);
    }

    void write_document(const Document& doc) const {
        write([&](std::ostream& os) { os << (pretty ? lrsk::pretty(doc) : serialize(doc)) << '\n'; });
    }
};

// Representations in correspondence order; convert steps along this chain.
constexpr DocumentKind kChain[] = {DocumentKind::parmat, DocumentKind::bcm,
                                   DocumentKind::flagged_biword, DocumentKind::tableau_pair};

int chain_position(DocumentKind kind) {
    for (int k = 0; k < 4; ++k)
        if (kChain[k] == kind)
            return k;
    throw ValidationError("a " + std::string(kind_name(kind)) +
                          " document is not part of the correspondence");
}

Document step(const Document& doc, bool forward) {
    switch (doc.kind()) {
    case DocumentKind::parmat:
        return {parmat_to_bcm(std::get<ParMatFlat>(doc.payload))};
    case DocumentKind::bcm:
        if (forward)
            return {bcm_to_biwords(std::get<FlaggedBCM>(doc.payload))};
        return {bcm_to_parmat(std::get<FlaggedBCM>(doc.payload))};
    case DocumentKind::flagged_biword:
        if (forward)
            return {biwords_to_tableaux(std::get<FlaggedBiword>(doc.payload))};
        return {biwords_to_bcm(std::get<FlaggedBiword>(doc.payload))};
    case DocumentKind::tableau_pair:
        return {tableaux_to_biwords(std::get<TableauPair>(doc.payload))};
    default:
        break;
    }
    throw ValidationError("no conversion from " + std::string(kind_name(doc.kind())));
}

Document convert(Document doc, DocumentKind target) {
    const int to = chain_position(target);
    for (int at = chain_position(doc.kind()); at != to; at = chain_position(doc.kind()))
        doc = step(doc, at < to);
    return doc;
}

Document expect_kind(Document doc, DocumentKind kind) {
    if (doc.kind() != kind)
        throw ValidationError("expected a " + std::string(kind_name(kind)) + " document, got " +
                              std::string(kind_name(doc.kind())));
    return doc;
}

MultiComposition parse_multicomposition_arg(const std::string& text, const char* flag) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(flag) + ": malformed JSON: " + e.what());
    }
    if (!arr.is_array() || arr.empty())
        throw ParseError(std::string(flag) + ": expected a nonempty array of part arrays");
    try {
        const auto doc = from_json({{"kind", "multicomposition"}, {"level", arr.size()}, {"payload", arr}});
        return std::get<MultiComposition>(doc.payload);
    } catch (const Error& e) {
        throw ParseError(std::string(flag) + ": " + e.what());
    }
}

MultiPartition to_multipartition(const MultiComposition& mu) {
    std::vector<Partition> parts;
    for (const auto& c : mu.components())
        parts.emplace_back(c.parts());
    return MultiPartition(std::move(parts));
}

json multitableau_json(const Multitableau& t) {
    json comps = json::array();
    for (const auto& comp : t.components()) {
        json rows = json::array();
        for (const auto& row : comp.rows()) {
            json r = json::array();
            for (const auto& x : row)
                r.push_back(json::array({x.value, x.flag}));
            rows.push_back(std::move(r));
        }
        comps.push_back(std::move(rows));
    }
    return comps;
}

json report_json(const SweepReport& report) {
    json checks = json::object();
    for (const auto& [name, tally] : report.checks)
        checks[name] = {{"run", tally.run}, {"failed", tally.failed}};
    return {{"budget", report.budget.to_string()},
            {"cells", report.cells},
            {"parmat_elements", report.parmat_elements},
            {"checks", std::move(checks)},
            {"failures", report.failures},
            {"failure_count", report.failure_count()},
            {"ok", report.ok()}};
}

struct EnumerateOptions {
    std::string family;
    std::optional<Part> n;
    std::optional<std::size_t> level;
    std::size_t max_length = EnumerationBudget{}.max_length;
    std::string nu, mu, shape;
    bool count = false;
};

void run_enumerate(const EnumerateOptions& opt, const Io& io) {
    std::size_t total = 0;
    std::vector<std::string> lines;
    auto emit = [&](const json& j) {
        ++total;
        if (!opt.count)
            lines.push_back(j.dump());
    };
    auto need_n_level = [&]() {
        if (!opt.n || !opt.level)
            throw ValidationError("family " + opt.family + " needs --n and --level");
        EnumerationBudget{*opt.n, *opt.level, opt.max_length}.validate();
    };
    auto need = [&](const std::string& value, const char* flag) {
        if (value.empty())
            throw ValidationError("family " + opt.family + " needs " + flag);
        return parse_multicomposition_arg(value, flag);
    };

    if (opt.family == "multicompositions") {
        need_n_level();
        for (auto& mu : enum_multicompositions(*opt.n, *opt.level, opt.max_length))
            emit(to_json(Document{std::move(mu)}));
    } else if (opt.family == "multipartitions") {
        need_n_level();
        for (const auto& lambda : enum_multipartitions(*opt.n, *opt.level)) {
            std::vector<Composition> comps;
            for (const auto& p : lambda.components())
                comps.emplace_back(p.parts());
            emit(to_json(Document{MultiComposition(std::move(comps))}));
        }
    } else if (opt.family == "parmat") {
        const auto nu = need(opt.nu, "--nu"), mu = need(opt.mu, "--mu");
        for_each_parmat(nu, mu, [&](const ParMatFlat& x) { emit(to_json(Document{x})); });
    } else if (opt.family == "bcm") {
        const auto nu = need(opt.nu, "--nu"), mu = need(opt.mu, "--mu");
        for_each_bcm(nu, mu, [&](const FlaggedBCM& x) { emit(to_json(Document{x})); });
    } else if (opt.family == "flagged-biwords") {
        const auto nu = need(opt.nu, "--nu"), mu = need(opt.mu, "--mu");
        for_each_flagged_biword(nu, mu, [&](const FlaggedBiword& x) { emit(to_json(Document{x})); });
    } else if (opt.family == "sst") {
        const auto lambda = to_multipartition(need(opt.shape, "--shape"));
        const auto mu = need(opt.mu, "--mu");
        for_each_sst(lambda, mu, [&](const Multitableau& t) { emit(multitableau_json(t)); });
    } else {
        throw ValidationError("unknown family " + opt.family);
    }

    io.write([&](std::ostream& os) {
        if (opt.count) {
            os << total << '\n';
            return;
        }
        for (const auto& line : lines)
            os << line << '\n';
    });
}

} // namespace

bool run_demo(std::ostream& out) {
    auto fixture = [](std::string_view name) { return parse_document(embedded_fixture(name)); };
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "ok       " : "MISMATCH ") << name << '\n';
        all_ok = all_ok && ok;
    };
    auto attempt = [&](const std::string& name, const std::function<bool()>& body) {
        try {
            report(name, body());
        } catch (const std::exception& e) {
            out << "MISMATCH " << name << " (" << e.what() << ")\n";
            all_ok = false;
        }
    };

    const auto nu = std::get<MultiComposition>(fixture("example_nu").payload);
    const auto mu = std::get<MultiComposition>(fixture("example_mu").payload);

    attempt("(A,P) <-> B", [&] {
        const auto x = std::get<ParMatFlat>(fixture("example_parmat").payload);
        const auto b = std::get<FlaggedBCM>(fixture("example_bcm").payload);
        return validate_parmat(x, nu, mu).empty() && parmat_to_bcm(x) == b && bcm_to_parmat(b) == x;
    });
    attempt("B <-> w", [&] {
        const auto b = std::get<FlaggedBCM>(fixture("example_bcm").payload);
        const auto w = std::get<FlaggedBiword>(fixture("example_biword").payload);
        return flagged_biword_violations(w, nu, mu).empty() && bcm_to_biwords(b) == w &&
               biwords_to_bcm(w) == b;
    });
    attempt("w -> (P,Q) componentwise", [&] {
        const auto w = std::get<FlaggedBiword>(fixture("example_biword").payload);
        const auto pq = std::get<TableauPair>(fixture("example_tableau_pair").payload);
        return biwords_to_tableaux(w) == pq && tableaux_to_biwords(pq) == w;
    });
    attempt("relabeled RSK on w(2)", [&] {
        const auto w = std::get<FlaggedBiword>(fixture("example_biword").payload);
        const auto r = relabeled_component_rsk(w, nu, mu, 2);
        const Biword<Part> word({{1, 1}, {1, 1}, {1, 1}, {2, 4}, {3, 3}});
        const BasicTableau<Part> p({{1, 1, 1, 3}, {4}});
        const BasicTableau<Part> q({{1, 1, 1, 2}, {3}});
        const auto pq = std::get<TableauPair>(fixture("example_tableau_pair").payload);
        return r.word == word && r.integer_tableaux.insertion == p &&
               r.integer_tableaux.recording == q &&
               r.tableaux.insertion == pq.insertion.components()[1] &&
               r.tableaux.recording == pq.recording.components()[1];
    });
    attempt("closing (P,Q) -> w -> B", [&] {
        const auto pq = std::get<TableauPair>(fixture("closing_tableau_pair").payload);
        const auto w = std::get<FlaggedBiword>(fixture("closing_biword").payload);
        const auto b = std::get<FlaggedBCM>(fixture("closing_bcm").payload);
        const auto x = std::get<ParMatFlat>(fixture("closing_parmat").payload);
        return tableaux_to_biwords(pq) == w && biwords_to_bcm(w) == b && bcm_to_parmat(b) == x &&
               psi_inverse(pq) == x && psi(x) == pq;
    });
    return all_ok;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Level-l RSK correspondence between decorated block matrices and pairs of "
                 "flagged multitableaux"};
    app.require_subcommand(1);
    Io io{in, out};
    auto add_io = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("--input", io.input, "Input document path, or - for stdin");
        cmd->add_option("--output", io.output, "Output path, or - for stdout");
    };
    auto add_pretty = [&](CLI::App* cmd) {
        cmd->add_flag("--pretty", io.pretty, "Human-readable rendering instead of JSON");
    };

    auto* forward = app.add_subcommand("forward", "ParMat document to tableau-pair document");
    add_io(forward, true);
    add_pretty(forward);

    auto* inverse = app.add_subcommand("inverse", "Tableau-pair document to ParMat document");
    add_io(inverse, true);
    add_pretty(inverse);

    std::string target;
    auto* convert_cmd =
        app.add_subcommand("convert", "Step a document along parmat, bcm, flagged-biword, "
                                      "tableau-pair; without --to, print it back canonically");
    add_io(convert_cmd, true);
    add_pretty(convert_cmd);
    convert_cmd->add_option("--to", target, "Target kind");

    EnumerateOptions eopt;
    auto* enumerate = app.add_subcommand("enumerate", "Stream a family, one JSON value per line");
    add_io(enumerate, false);
    enumerate
        ->add_option("--family", eopt.family,
                     "multicompositions, multipartitions, parmat, bcm, flagged-biwords or sst")
        ->required();
    enumerate->add_option("--n", eopt.n, "Weight");
    enumerate->add_option("--level", eopt.level, "Level");
    enumerate->add_option("--max-length", eopt.max_length, "Component length cap for multicompositions");
    enumerate->add_option("--nu", eopt.nu, "Row sums, e.g. [[2,1,2],[3],[2,3]]");
    enumerate->add_option("--mu", eopt.mu, "Column sums or content");
    enumerate->add_option("--shape", eopt.shape, "Multipartition shape for sst");
    enumerate->add_flag("--count", eopt.count, "Print only the number of items");

    std::string budget_spec;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "Exhaustive bijectivity and cardinality sweep");
    add_io(verify, false);
    verify->add_option("--budget", budget_spec, "e.g. n=3,level=2,length=3");
    verify->add_option("--threads", threads, "Worker threads, 0 for all cores");

    auto* demo = app.add_subcommand("demo", "Reproduce the worked examples against the fixtures");
    add_io(demo, false);

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (forward->parsed()) {
            const auto x = expect_kind(parse_document(io.read_input()), DocumentKind::parmat);
            io.write_document({psi(std::get<ParMatFlat>(x.payload))});
        } else if (inverse->parsed()) {
            const auto x = expect_kind(parse_document(io.read_input()), DocumentKind::tableau_pair);
            io.write_document({psi_inverse(std::get<TableauPair>(x.payload))});
        } else if (convert_cmd->parsed()) {
            auto doc = parse_document(io.read_input());
            if (!target.empty())
                doc = convert(std::move(doc), parse_kind(target));
            io.write_document(doc);
        } else if (enumerate->parsed()) {
            run_enumerate(eopt, io);
        } else if (verify->parsed()) {
            const auto budget = budget_spec.empty() ? EnumerationBudget{} : EnumerationBudget::parse(budget_spec);
            budget.validate();
            const auto report = run_sweep(budget, threads);
            io.write([&](std::ostream& os) { os << report_json(report).dump(2) << '\n'; });
            if (!report.ok())
                throw VerificationFailure(std::to_string(report.failure_count()) + " failed checks");
        } else if (demo->parsed()) {
            std::ostringstream log;
            const bool ok = run_demo(log);
            io.write([&](std::ostream& os) { os << log.str(); });
            if (!ok)
                throw VerificationFailure("worked examples do not match the fixtures");
        }
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kSuccess;
}

} // namespace lrsk::cli
