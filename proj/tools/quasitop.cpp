// quasitop: analyze finite generalized topologies, families of sets and
// quasiorders; check catalog statements; sweep and search for counterexamples.
//
// Exit codes: 0 success (holds, hypothesis not met, none found), 1 violated
// or counterexample found, 2 usage, parse or cap error.

#include <quasitop/quasitop.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace quasitop;

constexpr int exit_ok = 0;
constexpr int exit_violated = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t max_n = 0; // 0: default caps
    Limits limits;
    std::size_t exhaustive_limit = exhaustive_cap;

    void apply()
    {
        if (max_n == 0) {
            return;
        }
        std::cerr << "warning: caps raised to n=" << max_n << "; this may be slow\n";
        limits.enumeration_cap = std::max(limits.enumeration_cap, max_n);
        limits.resolvability_cap = std::max(limits.resolvability_cap, max_n);
        exhaustive_limit = std::max(exhaustive_limit, max_n);
    }
};

SpaceDocument load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    SpaceDocument doc;
    try {
        doc = parse_document_text(buf.str());
    } catch (const DocumentError& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (doc.kind == DocumentKind::quasiorder) {
        std::cerr << "note: quasiorder taken as its reflexive-transitive closure (" << doc.closure_added
                  << " implied pair(s) added)\n";
    }
    return doc;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& file, bool as_json, const Options& opt)
{
    const SpaceDocument doc = load(file);
    const json report = analyze(doc, opt.limits);
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << render_analysis(report);
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

Instance coerce(const SpaceDocument& doc, const StatementInfo& info, const Options& opt)
{
    auto note = [](const std::string& s) { std::cerr << "note: " << s << "\n"; };
    switch (info.kind) {
    case InstanceKind::family:
        switch (doc.kind) {
        case DocumentKind::family: return FamilyInstance{doc.ground, doc.family};
        case DocumentKind::open_sets:
            note("family statement applied to A = the open sets");
            return FamilyInstance{doc.ground, doc.family};
        case DocumentKind::quasiorder:
            note("family statement applied to A = tau[<=]");
            return FamilyInstance{doc.ground, specialization_topology(*doc.order, opt.limits)};
        }
        break;
    case InstanceKind::space:
        if (doc.kind == DocumentKind::family) {
            note("space statement applied to mu[A]");
        } else if (doc.kind == DocumentKind::quasiorder) {
            note("space statement applied to tau[<=]");
        }
        return document_space(doc, opt.limits);
    case InstanceKind::quasiorder:
        if (doc.kind == DocumentKind::quasiorder) {
            return OrderInstance{doc.ground, *doc.order};
        }
        note("quasiorder statement applied to the quasiorder induced by the document's sets");
        return OrderInstance{doc.ground, quasiorder_from_family(doc.family, doc.ground)};
    case InstanceKind::quasiorder_pair: break;
    }
    throw UsageError("statement " + std::string(info.id)
                     + " takes a pair of quasiorders; it is checked by `search` over all pairs");
}

StatementInfo require_statement(const std::string& id)
{
    auto info = find_statement(id);
    if (!info) {
        throw UsageError("unknown statement \"" + id + "\"; run `quasitop list` for the catalog");
    }
    return *info;
}

int cmd_check(const std::string& file, const std::string& id, bool as_json, const Options& opt)
{
    const StatementInfo info = require_statement(id);
    const SpaceDocument doc = load(file);
    const ConditionReport r = check(id, coerce(doc, info, opt), opt.limits);
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        std::cout << render_report(r);
    }
    return r.verdict == Verdict::violated ? exit_violated : exit_ok;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

int cmd_search(const std::string& id, std::size_t n, std::size_t budget, std::uint64_t seed, std::size_t samples,
               bool as_json, const Options& opt)
{
    require_statement(id);
    if (n > opt.limits.enumeration_cap) {
        throw CapExceeded("search", n, opt.limits.enumeration_cap);
    }
    const SearchResult s = search_counterexample(id, n, budget, seed, samples, opt.limits, opt.exhaustive_limit);
    if (as_json) {
        std::cout << search_to_json(id, s).dump(2) << "\n";
    } else {
        std::cout << render_search(s);
    }
    return s.counterexample ? exit_violated : exit_ok;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

/// Flag expressions: names joined by &, |, ! (or and, or, not) with parentheses.
class FilterExpr {
  public:
    using Flags = std::map<std::string, std::function<bool()>>;

    static std::unique_ptr<FilterExpr> parse(const std::string& text, const std::vector<std::string>& known)
    {
        Parser p{tokenize(text), 0, known};
        auto e = p.expr();
        if (p.pos != p.tokens.size()) {
            throw UsageError("filter: unexpected \"" + p.tokens[p.pos] + "\"");
        }
        return e;
    }

    bool eval(const Flags& flags) const
    {
        switch (op_) {
        case Op::flag: return flags.at(name_)();
        case Op::negate: return !lhs_->eval(flags);
        case Op::both: return lhs_->eval(flags) && rhs_->eval(flags);
        case Op::either: return lhs_->eval(flags) || rhs_->eval(flags);
        }
        return false;
    }

  private:
    enum class Op { flag, negate, both, either };

    static std::string normalize(std::string s)
    {
        for (char& c : s) {
            c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        return s;
    }

    static std::vector<std::string> tokenize(const std::string& text)
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < text.size();) {
            const char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '&' || c == '|') {
                out.emplace_back(1, c);
                i += (i + 1 < text.size() && text[i + 1] == c) ? 2 : 1;
            } else if (c == '!' || c == '(' || c == ')' || c == ',') {
                out.emplace_back(1, c == ',' ? '&' : c);
                ++i;
            } else {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '-'
                                           || text[j] == '_' || text[j] == '^')) {
                    ++j;
                }
                if (j == i) {
                    throw UsageError(std::string("filter: unexpected character '") + c + "'");
                }
                std::string word = normalize(text.substr(i, j - i));
                out.push_back(word == "and" ? "&" : word == "or" ? "|" : word == "not" ? "!" : word);
                i = j;
            }
        }
        return out;
    }

    struct Parser {
        std::vector<std::string> tokens;
        std::size_t pos;
        const std::vector<std::string>& known;

        bool accept(const char* t)
        {
            if (pos < tokens.size() && tokens[pos] == t) {
                ++pos;
                return true;
            }
            return false;
        }

        std::unique_ptr<FilterExpr> expr()
        {
            auto lhs = term();
            while (accept("|")) {
                lhs = combine(Op::either, std::move(lhs), term());
            }
            return lhs;
        }

        std::unique_ptr<FilterExpr> term()
        {
            auto lhs = factor();
            while (accept("&")) {
                lhs = combine(Op::both, std::move(lhs), factor());
            }
            return lhs;
        }

        std::unique_ptr<FilterExpr> factor()
        {
            if (accept("!")) {
                return combine(Op::negate, factor(), nullptr);
            }
            if (accept("(")) {
                auto e = expr();
                if (!accept(")")) {
                    throw UsageError("filter: missing ')'");
                }
                return e;
            }
            if (pos >= tokens.size()) {
                throw UsageError("filter: expression ends early");
            }
            const std::string& name = tokens[pos++];
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                std::string list;
                for (const auto& k : known) {
                    list += (list.empty() ? "" : ", ") + k;
                }
                throw UsageError("filter: unknown flag \"" + name + "\" (available: " + list + ")");
            }
            auto e = std::make_unique<FilterExpr>();
            e->op_ = Op::flag;
            e->name_ = name;
            return e;
        }

        static std::unique_ptr<FilterExpr> combine(Op op, std::unique_ptr<FilterExpr> a,
                                                   std::unique_ptr<FilterExpr> b)
        {
            auto e = std::make_unique<FilterExpr>();
            e->op_ = op;
            e->lhs_ = std::move(a);
            e->rhs_ = std::move(b);
            return e;
        }
    };

    Op op_ = Op::flag;
    std::string name_;
    std::unique_ptr<FilterExpr> lhs_, rhs_;
};

FilterExpr::Flags space_flags(const GenTopology& t, const Limits& limits)
{
    return {
        {"t0", [&t] { return is_T0(t); }},
        {"t1", [&t] { return is_T1(t); }},
        {"indiscrete", [&t] { return is_indiscrete(t); }},
        {"discrete", [&t] { return is_discrete(t); }},
        {"iso-dense", [&t] { return is_iso_dense(t); }},
        {"dense-in-itself", [&t] { return is_dense_in_itself(t); }},
        {"resolvable", [&t, &limits] { return is_resolvable(t, limits); }},
        {"fd", [&t, &limits] { return f_d(t, limits); }},
        {"fd-t", [&t, &limits] { return f_d_T(t, limits); }},
        {"strong", [&t] { return classify(t).strong; }},
        {"topology", [&t] { return classify(t).topology; }},
        {"alexandroff", [&t] { return classify(t).alexandroff; }},
    };
}

std::vector<std::string> flag_names(const FilterExpr::Flags& f)
{
    std::vector<std::string> out;
    for (const auto& [k, v] : f) {
        out.push_back(k);
    }
    return out;
}

FilterExpr::Flags family_flags(const GroundSet& g, const SetFamily& a, const Limits& limits)
{
    return {
        {"admissible", [&a] { return detail::has_nonempty_member(a); }},
        {"gentopology", [&g, &a] { return classify(a, g).generalized_topology; }},
        {"strong", [&g, &a] { return classify(a, g).strong; }},
        {"topology", [&g, &a] { return classify(a, g).topology; }},
        {"covers", [&g, &a] { return a.span() == g.whole(); }},
        {"i-empty", [&a] { return try_cap_I(a) && try_cap_I(a)->empty(); }},
        {"i-nonempty", [&a] { return try_cap_I(a) && !try_cap_I(a)->empty(); }},
        {"tau-eq-mu",
         [&g, &a, &limits] {
             return specialization_topology(quasiorder_from_family(a, g), limits) == union_closure(a);
         }},
        {"tilde-fixed",
         [&g, &a, &limits] {
             const SetFamily mt = mu_tilde_of_family(a, g, limits).opens();
             return specialization_topology(quasiorder_from_family(mt, g), limits) == mt;
         }},
    };
}

int cmd_enumerate(std::size_t n, const std::string& kind, const std::string& filter, bool count_only,
                  const Options& opt)
{
    if (kind != "families" && kind != "gentopos" && kind != "quasiorders") {
        throw UsageError("--kind must be families, gentopos or quasiorders");
    }
    if (n > opt.exhaustive_limit) {
        throw CapExceeded("enumerate " + kind + " (raise with --max-n)", n, opt.exhaustive_limit);
    }
    if (kind != "quasiorders" && n > 5) {
        throw UsageError("families on more than 5 points cannot be indexed");
    }
    const GroundSet g = GroundSet::numbered(n);

    // Flag names are fixed per kind; evaluate them on an empty instance to list them.
    std::vector<std::string> known;
    if (kind == "families") {
        SetFamily probe;
        known = flag_names(family_flags(g, probe, opt.limits));
    } else {
        GenTopology probe(g, SetFamily{Subset{}});
        known = flag_names(space_flags(probe, opt.limits));
        if (kind == "quasiorders") {
            known.push_back("antisymmetric");
            known.push_back("below-maximal");
        }
    }
    std::unique_ptr<FilterExpr> expr;
    if (!filter.empty()) {
        expr = FilterExpr::parse(filter, known);
    }

    std::size_t total = 0;
    std::size_t matching = 0;
    std::size_t admissible = 0;
    auto emit = [&](const SpaceDocument& doc, bool match) {
        ++total;
        if (match) {
            ++matching;
            if (!count_only) {
                std::cout << document_to_json(doc).dump() << "\n";
            }
        }
    };

    if (kind == "quasiorders") {
        detail::for_each_quasiorder(n, [&](Quasiorder q) {
            bool match = true;
            if (expr) {
                const GenTopology t(g, specialization_topology(q, opt.limits));
                auto flags = space_flags(t, opt.limits);
                flags["antisymmetric"] = [&q] { return q.is_antisymmetric(); };
                flags["below-maximal"] = [&q] {
                    const Subset m = maximal_elements(q);
                    for (std::size_t x = 0; x < q.size(); ++x) {
                        if (!up_set(q, x).meets(m)) {
                            return false;
                        }
                    }
                    return true;
                };
                match = expr->eval(flags);
            }
            SpaceDocument doc;
            doc.ground = g;
            doc.kind = DocumentKind::quasiorder;
            doc.order = std::move(q);
            emit(doc, match);
            return true;
        });
    } else {
        const std::size_t subsets = std::size_t{1} << n;
        const std::uint64_t codes = std::uint64_t{1} << subsets;
        for (std::uint64_t code = 0; code < codes; ++code) {
            const bool gentopo = detail::code_is_gentopology(code, subsets);
            if (kind == "gentopos" && !gentopo) {
                continue;
            }
            SpaceDocument doc;
            doc.ground = g;
            doc.kind = kind == "gentopos" ? DocumentKind::open_sets : DocumentKind::family;
            doc.family = detail::decode_family(code);
            if (code > 1) {
                ++admissible;
            }
            bool match = true;
            if (expr) {
                if (kind == "gentopos") {
                    const GenTopology t(g, doc.family);
                    match = expr->eval(space_flags(t, opt.limits));
                } else {
                    match = expr->eval(family_flags(g, doc.family, opt.limits));
                }
            }
            emit(doc, match);
        }
    }

    if (count_only) {
        std::cout << matching << "\n";
        if (expr) {
            std::cout << "of: " << total << "\n";
        }
        if (kind == "families") {
            std::cout << "admissible: " << admissible << "\n";
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

int cmd_list()
{
    for (const auto& s : catalog()) {
        std::cout << s.id << std::string(s.id.size() < 16 ? 16 - s.id.size() : 1, ' ') << "[" << to_string(s.kind)
                  << "] " << s.summary;
        if (s.expected_false) {
            std::cout << " (variant: counterexamples expected)";
        }
        std::cout << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quasiorders, generalized topologies and dense sets on finite carriers"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--max-n", opt.max_n, "raise the enumeration caps to n (may be slow)");

    std::string file, statement, kind, filter;
    bool as_json = false, count_only = false;
    std::size_t n = 0, budget = 0, samples = 10000;
    std::uint64_t seed = 1;

    auto* analyze_cmd = app.add_subcommand("analyze", "derived structures and flags of one document");
    analyze_cmd->add_option("file", file, "JSON document")->required();
    analyze_cmd->add_flag("--json", as_json, "emit JSON");

    auto* check_cmd = app.add_subcommand("check", "evaluate one catalog statement on one document");
    check_cmd->add_option("file", file, "JSON document")->required();
    check_cmd->add_option("statement", statement, "statement id (see `list`)")->required();
    check_cmd->add_flag("--json", as_json, "emit JSON");

    auto* search_cmd = app.add_subcommand("search", "first counterexample over n = 1..k");
    search_cmd->add_option("statement", statement, "statement id")->required();
    search_cmd->add_option("--n", n, "largest carrier size")->required();
    search_cmd->add_option("--budget", budget, "maximum number of instances (0: unbounded)");
    search_cmd->add_option("--seed", seed, "seed for sizes sampled at random");
    search_cmd->add_option("--samples", samples, "random instances per size above the exhaustive cap");
    search_cmd->add_flag("--json", as_json, "emit JSON");

    auto* enum_cmd = app.add_subcommand("enumerate", "list or count families, gentopos or quasiorders");
    enum_cmd->add_option("--n", n, "carrier size")->required();
    enum_cmd->add_option("--kind", kind, "families | gentopos | quasiorders")->required();
    enum_cmd->add_option("--filter", filter, "flag expression, e.g. 'resolvable & !t0'");
    enum_cmd->add_flag("--count-only", count_only, "print counts instead of listing");

    auto* list_cmd = app.add_subcommand("list", "the statement catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        opt.apply();
        if (analyze_cmd->parsed()) {
            return cmd_analyze(file, as_json, opt);
        }
        if (check_cmd->parsed()) {
            return cmd_check(file, statement, as_json, opt);
        }
        if (search_cmd->parsed()) {
            return cmd_search(statement, n, budget, seed, samples, as_json, opt);
        }
        if (enum_cmd->parsed()) {
            return cmd_enumerate(n, kind, filter, count_only, opt);
        }
        if (list_cmd->parsed()) {
            return cmd_list();
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (use --max-n to override; may be slow)\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
