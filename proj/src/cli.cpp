#include "hvec/cli.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hvec/decomposition.hpp"
#include "hvec/enumeration.hpp"
#include "hvec/errors.hpp"
#include "hvec/monomial_oracle.hpp"

namespace hvec::cli {

namespace {

using Json = nlohmann::ordered_json;

Json violation_json(const std::optional<std::size_t>& degree) {
    return degree ? Json(*degree) : Json(nullptr);
}

Json verdict_json(const Check& c) {
    return Json{{"holds", c.holds}, {"first_violation", violation_json(c.first_violation)}};
}

Json reason_json(const Reason& r) {
    return Json{{"kind", to_string(r.kind)}, {"degree", violation_json(r.degree)}};
}

Json report(std::string_view command, Json input) {
    return Json{{"version", kSchemaVersion},
                {"command", command},
                {"input", std::move(input)},
                {"verdicts", Json::object()},
                {"certificate", nullptr}};
}

std::string describe(const Check& c) {
    if (c.holds) return "true";
    return "false (degree " + std::to_string(*c.first_violation) + ")";
}

std::string describe(const Reason& r) {
    std::string s = to_string(r.kind);
    if (r.degree) s += " at degree " + std::to_string(*r.degree);
    return s;
}

bool is_decimal(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct Predicates {
    Check o_sequence;
    Check symmetric;
    Check unimodal;
    Check differentiable;
    SICheck si;

    explicit Predicates(const HVector& h)
        : o_sequence(is_o_sequence(h)),
          symmetric(is_symmetric(h)),
          unimodal(is_unimodal(h)),
          differentiable(is_differentiable(first_half(h))),
          si(is_si_sequence(h)) {}

    Json verdicts() const {
        Check si_check{si.holds, si.reasons.empty() ? std::nullopt : si.reasons.front().degree};
        return Json{{"o_sequence", verdict_json(o_sequence)},
                    {"symmetric", verdict_json(symmetric)},
                    {"unimodal", verdict_json(unimodal)},
                    {"differentiable_first_half", verdict_json(differentiable)},
                    {"si_sequence", verdict_json(si_check)}};
    }
};

int cmd_expand(const std::string& n_text, const std::string& i_text, bool json, std::ostream& out,
               std::ostream& err) {
    if (!is_decimal(n_text) || !is_decimal(i_text)) {
        err << "error: expand takes two non-negative integers\n";
        return kUsage;
    }
    const Integer n(n_text);
    const Integer i_big(i_text);
    if (n < 1) {
        err << "error: n must be positive\n";
        return kUsage;
    }
    if (i_big < 1 || i_big > std::numeric_limits<std::uint32_t>::max()) {
        err << "error: i must be positive\n";
        return kUsage;
    }
    const auto i = static_cast<std::uint64_t>(i_big);
    const BinomialExpansion ex = expand(n, i);
    const Integer bound = ex.raised();
    if (json) {
        Json r = report("expand", Json{{"n", n.str()}, {"i", i}});
        Json terms = Json::array();
        for (const auto& t : ex.terms()) terms.push_back(Json{{"top", t.top.str()}, {"bottom", t.bottom}});
        r["certificate"] = Json{{"terms", terms}, {"bound", bound.str()}};
        out << r.dump() << '\n';
    } else {
        out << n << " = " << ex.to_string() << "; bound = " << bound << '\n';
    }
    return kOk;
}

int cmd_check(const HVector& h, bool json, std::ostream& out) {
    const Predicates p(h);
    if (json) {
        Json r = report("check", h.values());
        r["verdicts"] = p.verdicts();
        out << r.dump() << '\n';
    } else {
        out << "h = " << h.to_string() << '\n';
        out << "o_sequence: " << describe(p.o_sequence) << '\n';
        out << "symmetric: " << describe(p.symmetric) << '\n';
        out << "unimodal: " << describe(p.unimodal) << '\n';
        out << "differentiable_first_half: " << describe(p.differentiable) << '\n';
        out << "si_sequence: " << (p.si.holds ? "true" : "false");
        for (std::size_t k = 0; k < p.si.reasons.size(); ++k)
            out << (k == 0 ? " (" : "; ") << describe(p.si.reasons[k]);
        out << (p.si.reasons.empty() ? "" : ")") << '\n';
    }
    return p.si.holds ? kOk : kNegative;
}

int cmd_classify(const HVector& h, bool json, std::ostream& out) {
    const ClassificationReport c = classify_gorenstein(h);
    if (json) {
        Json r = report("classify", h.values());
        r["verdicts"] = Predicates(h).verdicts();
        Json reasons = Json::array();
        for (const auto& reason : c.reasons) reasons.push_back(reason_json(reason));
        r["certificate"] =
            Json{{"verdict", to_string(c.verdict)}, {"codimension", c.codimension}, {"reasons", reasons}};
        out << r.dump() << '\n';
    } else {
        out << "h = " << h.to_string() << '\n';
        out << "verdict: " << to_string(c.verdict) << '\n';
        out << "codimension: " << c.codimension << '\n';
        for (const auto& reason : c.reasons) out << "reason: " << describe(reason) << '\n';
    }
    switch (c.verdict) {
        case Verdict::Gorenstein: return kOk;
        case Verdict::NotGorenstein: return kNegative;
        case Verdict::Undecided: return kUndecided;
    }
    return kNegative;
}

int cmd_realize(const HVector& h, bool json, std::ostream& out, std::ostream& err) {
    if (h.codimension() < 1) {
        err << "error: realization needs h_1 >= 1\n";
        return kUsage;
    }
    try {
        const SurvivorTable t = lex_segment_realization(h);
        if (json) {
            Json r = report("realize", h.values());
            Json degrees = Json::array();
            for (const auto& layer : t.per_degree()) {
                Json names = Json::array();
                for (const auto& m : layer) names.push_back(m.to_string());
                degrees.push_back(names);
            }
            r["verdicts"] = Json{{"o_sequence", verdict_json(Check::pass())}};
            r["certificate"] = Json{{"variables", t.num_variables()}, {"survivors", degrees}};
            out << r.dump() << '\n';
        } else {
            out << t.render();
        }
        return kOk;
    } catch (const NotAnOSequence& e) {
        if (json) {
            Json r = report("realize", h.values());
            r["verdicts"] = Json{{"o_sequence", verdict_json(Check::fail(e.degree()))}};
            out << r.dump() << '\n';
        }
        err << e.what() << '\n';
        return kNegative;
    }
}

int cmd_socle(const HVector& h, bool json, std::ostream& out, std::ostream& err) {
    if (h.codimension() < 1) {
        err << "error: realization needs h_1 >= 1\n";
        return kUsage;
    }
    try {
        const SocleVector s = socle_vector(lex_segment_realization(h));
        if (json) {
            Json r = report("socle", h.values());
            r["certificate"] = Json{{"socle", s.entries}, {"gorenstein", s.is_gorenstein()}};
            out << r.dump() << '\n';
        } else {
            out << join(s.entries) << '\n';
        }
        return kOk;
    } catch (const NotAnOSequence& e) {
        err << e.what() << '\n';
        return kNegative;
    }
}

Json decomposition_json(const StanleyDecomposition& d) {
    return Json{{"pivot", d.pivot}, {"subtrahend", d.subtrahend}, {"residual", d.residual}};
}

std::string stripped(const Sequence& v) {
    Sequence s(v);
    while (s.size() > 1 && s.back() == 0) s.pop_back();
    return join(s);
}

int cmd_decompose(const HVector& h, std::size_t pivot, bool json, std::ostream& out, std::ostream& err) {
    if (pivot < 1 || pivot > h.socle_degree()) {
        err << "error: pivot must lie in [1, " << h.socle_degree() << "]\n";
        return kUsage;
    }
    std::optional<StanleyDecomposition> d;
    try {
        d = find_stanley_decomposition(h, pivot);
    } catch (const UnsupportedCodimension& e) {
        err << "error: " << e.what() << ": decompositions are only searched for h_1 <= 3\n";
        return kUsage;
    }
    if (!d) {
        if (json) {
            Json r = report("decompose", h.values());
            r["verdicts"] = Json{{"decomposition_exists", Json{{"holds", false}, {"first_violation", nullptr}}}};
            out << r.dump() << '\n';
        }
        err << "no decomposition at pivot " << pivot << '\n';
        return kNegative;
    }

    std::vector<ProofTrace> traces;
    const bool replay = pivot == 1 && h.codimension() == 3 && is_symmetric(h).holds;
    if (replay) {
        try {
            traces = verify_proof_inequalities(h, *d);
        } catch (const TraceViolation& e) {
            err << "IMPOSSIBLE: " << e.what() << '\n';
            return kImpossible;
        }
    }

    if (json) {
        Json r = report("decompose", h.values());
        r["verdicts"] = Json{{"decomposition_exists", Json{{"holds", true}, {"first_violation", nullptr}}}};
        Json cert = decomposition_json(*d);
        Json tj = Json::array();
        for (const auto& t : traces) {
            Json checks = Json::array();
            for (const auto& c : t.checked)
                checks.push_back(Json{{"label", c.label}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
            tj.push_back(Json{{"degree", t.degree}, {"case", to_string(t.proof_case)}, {"checked", checks}});
        }
        cert["traces"] = tj;
        r["certificate"] = cert;
        out << r.dump() << '\n';
    } else {
        out << "a = " << join(d->subtrahend) << "; residual = " << stripped(d->residual) << '\n';
        for (const auto& t : traces) {
            out << "trace i=" << t.degree << " " << to_string(t.proof_case) << ":";
            for (std::size_t k = 0; k < t.checked.size(); ++k) {
                const auto& c = t.checked[k];
                out << (k == 0 ? " " : ", ") << c.label << ' ' << c.lhs << " <= " << c.rhs;
            }
            out << '\n';
        }
    }
    return kOk;
}

int cmd_refute(const HVector& h, bool json, std::ostream& out, std::ostream& err) {
    RefutationReport rep;
    try {
        rep = refute_non_si(h);
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (json) {
        Json r = report("refute", h.values());
        Json refuted = Json::array();
        for (const auto& c : rep.refuted)
            refuted.push_back(Json{{"subtrahend", c.subtrahend}, {"violation_degree", c.violation_degree}});
        Json survivors = Json::array();
        for (const auto& s : rep.survivors) survivors.push_back(decomposition_json(s));
        r["certificate"] = Json{{"candidates", rep.candidates}, {"survivors", survivors}, {"refuted", refuted}};
        out << r.dump() << '\n';
    } else {
        out << "candidates: " << rep.candidates << ", survivors: " << rep.survivors.size() << '\n';
        for (const auto& c : rep.refuted)
            out << "a = " << join(c.subtrahend) << ": residual fails at degree " << c.violation_degree << '\n';
        for (const auto& s : rep.survivors)
            out << "SURVIVOR a = " << join(s.subtrahend) << "; residual = " << stripped(s.residual) << '\n';
    }
    if (!rep.clean()) {
        err << "IMPOSSIBLE: refutation survivors found\n";
        return kImpossible;
    }
    return kOk;
}

int cmd_enumerate(std::size_t degree, Entry codim, Entry cap, const std::string& filter_name, bool count_only,
                  std::ostream& out, std::ostream& err) {
    const auto filter = parse_filter(filter_name);
    if (!filter) {
        err << "error: unknown filter '" << filter_name << "' (all, symmetric, si, symmetric-not-si)\n";
        return kUsage;
    }
    const EnumerationSpec spec{degree, codim, cap, *filter};
    try {
        spec.validate();
    } catch (const PreconditionViolated& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (count_only) {
        for (const auto& [e, n] : count_by_degree(codim, degree, cap, *filter))
            out << Json{{"degree", e}, {"count", n}}.dump() << '\n';
        return kOk;
    }
    enumerate(spec, [&](const HVector& h) { out << Json{{"h", h.values()}}.dump() << '\n'; });
    return kOk;
}

}  // namespace

HVector parse_hvector(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    Sequence entries;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = compact.find(',', start);
        const std::string token = compact.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!is_decimal(token) || token.size() > 18)
            throw InvalidHVector("invalid h-vector entry '" + token + "'");
        entries.push_back(std::stoll(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return HVector(std::move(entries));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert-function combinatorics: Macaulay bounds, SI-sequences, codimension-3 Gorenstein h-vectors"};
    app.name("hvec");
    app.require_subcommand(1);

    std::string n_text, i_text, hv_text, filter_name = "all";
    bool json = false;
    bool count_only = false;
    std::size_t pivot = 1;
    std::size_t degree = 0;
    Entry codim = 0;
    Entry cap = kDefaultEntryCap;

    auto* expand_cmd = app.add_subcommand("expand", "i-binomial expansion of n and the bound n^<i>");
    expand_cmd->add_option("n", n_text)->required();
    expand_cmd->add_option("i", i_text)->required();
    expand_cmd->add_flag("--json", json);

    auto add_hv = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("hvector", hv_text, "comma-separated entries, e.g. 1,3,4,3,1")->required();
        cmd->add_flag("--json", json);
        return cmd;
    };
    auto* check_cmd = add_hv("check", "O-sequence, symmetry, unimodality, differentiability and SI predicates");
    auto* classify_cmd = add_hv("classify", "Gorenstein / NotGorenstein / Undecided verdict");
    auto* realize_cmd = add_hv("realize", "standard monomials of the lex-segment realization");
    auto* socle_cmd = add_hv("socle", "socle vector of the lex-segment realization");
    auto* decompose_cmd = add_hv("decompose", "subtrahend/residual decomposition and proof traces");
    decompose_cmd->add_option("--pivot", pivot, "pivot degree j");
    auto* refute_cmd = add_hv("refute", "exhaustively refute every decomposition of a symmetric non-SI vector");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "JSON-lines catalog of h-vectors");
    enumerate_cmd->add_option("--degree", degree, "socle degree e")->required();
    enumerate_cmd->add_option("--codim", codim, "codimension h_1")->required();
    enumerate_cmd->add_option("--cap", cap, "largest allowed entry");
    enumerate_cmd->add_option("--filter", filter_name, "all | symmetric | si | symmetric-not-si");
    enumerate_cmd->add_flag("--count-only", count_only, "print {degree, count} for every degree up to e");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (expand_cmd->parsed()) return cmd_expand(n_text, i_text, json, out, err);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(degree, codim, cap, filter_name, count_only, out, err);

        HVector h = parse_hvector(hv_text);
        if (check_cmd->parsed()) return cmd_check(h, json, out);
        if (classify_cmd->parsed()) return cmd_classify(h, json, out);
        if (realize_cmd->parsed()) return cmd_realize(h, json, out, err);
        if (socle_cmd->parsed()) return cmd_socle(h, json, out, err);
        if (decompose_cmd->parsed()) return cmd_decompose(h, pivot, json, out, err);
        if (refute_cmd->parsed()) return cmd_refute(h, json, out, err);
    } catch (const InvalidHVector& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hvec::cli
