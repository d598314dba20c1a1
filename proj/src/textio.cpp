#include "hookpairs/textio.hpp"

#include <cctype>
#include <sstream>

namespace hookpairs {

namespace mp = boost::multiprecision;

namespace {

Json int_json(const Int& v) {
    // numbers stay numbers as long as they fit
    if (v >= LLONG_MIN && v <= LLONG_MAX) return Json(static_cast<long long>(v));
    return Json(v.str());
}

Json rat_json(const Rat& v) {
    std::ostringstream os;
    os << v;
    return Json(os.str());
}

}  // namespace

Composition parse_composition(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> Int {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-')
            throw ParseError("negative part not allowed", pos);
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a nonnegative integer", pos);
        return Int(text.substr(start, pos - start));
    };

    std::vector<Int> parts;
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty composition", pos);
    if (text[pos] != '@') {
        parts.push_back(read_int());
        skip_ws();
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            parts.push_back(read_int());
            skip_ws();
        }
    }
    int ambient = static_cast<int>(parts.size());
    if (pos < text.size() && text[pos] == '@') {
        ++pos;
        Int n = read_int();
        skip_ws();
        int nn = checked_int(n, "ambient length");
        if (nn < ambient) throw ParseError("ambient length smaller than the number of parts", pos);
        ambient = nn;
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
    parts.resize(static_cast<std::size_t>(ambient));
    return Composition(std::move(parts));
}

std::string render(const Composition& alpha) {
    if (alpha.ambient() == 0) return "@0";
    std::ostringstream os;
    for (int i = 1; i <= alpha.ambient(); ++i) {
        if (i > 1) os << ',';
        os << alpha.part(i);
    }
    return os.str();
}

std::string render_trimmed(const Composition& alpha) {
    Composition t = alpha.trimmed();
    return t.ambient() == 0 ? "0" : render(t);
}

std::string diagram(const Composition& alpha) {
    std::ostringstream os;
    for (int i = 1; i <= alpha.length(); ++i) {
        long long ai = checked_ll(alpha.part(i), "part");
        os << 'o';  // column 0
        for (long long j = 1; j <= ai; ++j) os << " #";
        os << '\n';
    }
    return os.str();
}

Json composition_json(const Composition& alpha) {
    Json arr = Json::array();
    Composition t = alpha.trimmed();
    for (int i = 1; i <= t.ambient(); ++i) arr.push_back(int_json(t.part(i)));
    return arr;
}

Json trace_json(const AlgorithmTrace& trace) {
    Json j;
    j["l"] = trace.shift_l;
    j["m"] = trace.m;
    j["n"] = int_json(trace.n);
    j["N"] = trace.ambient;
    j["T"] = trace.T;
    j["t"] = trace.t;
    j["k"] = trace.k;
    j["T0"] = trace.T0;
    j["w"] = trace.w;
    Json xi = Json::array();
    for (const DeformedValue& v : trace.xi) xi.push_back(Json::array({int_json(v.base), v.upsilon_count}));
    j["xi"] = xi;
    return j;
}

Json construct_json(const ConstructResult& result) {
    Json j;
    j["node"] = Json{{"row", result.node.row}, {"col", result.node.col}};
    j["beta"] = composition_json(result.beta);
    j["trace"] = trace_json(result.trace);
    return j;
}

Json certificate_json(const CriticalPairCertificate& cert) {
    Json j;
    j["alpha"] = composition_json(cert.alpha);
    j["beta"] = composition_json(cert.beta);
    j["m"] = int_json(cert.m);
    j["n"] = int_json(cert.n);
    Json q = Json::array();
    for (const Rat& x : cert.quotients) q.push_back(rat_json(x));
    j["quotients"] = q;
    return j;
}

Json closure_json(const Composition& alpha, const Int& m, const Int& n, int depth,
                  const std::vector<ClosureEntry>& entries) {
    Json j;
    j["alpha"] = composition_json(alpha);
    j["m"] = int_json(m);
    j["n"] = int_json(n);
    j["depth"] = depth;
    Json arr = Json::array();
    for (const ClosureEntry& e : entries) {
        Json rec;
        rec["beta"] = composition_json(e.beta);
        rec["parent"] = composition_json(e.parent);
        rec["node"] = Json{{"row", e.node.row}, {"col", e.node.col}};
        rec["factor"] = Json{{"m", int_json(e.step_m)}, {"n", int_json(e.step_n)}};
        rec["depth"] = e.depth;
        arr.push_back(rec);
    }
    j["partners"] = arr;
    return j;
}

Json hooks_json(const Composition& alpha) {
    Json j;
    j["alpha"] = composition_json(alpha);
    Json arr = Json::array();
    for (const HookFactor& f : hook_factors_all(alpha)) {
        Json rec;
        rec["node"] = Json{{"row", f.node.row}, {"col", f.node.col}};
        rec["leg_length"] = leg_length(alpha, f.node);
        rec["factor"] = f.str();
        auto red = f.reduced();
        rec["reduced"] = Json{{"m", int_json(red.first)}, {"n", int_json(red.second)}};
        arr.push_back(rec);
    }
    j["factors"] = arr;
    return j;
}

Json jack_report_json(const JackReport& report) {
    Json j;
    j["alpha"] = composition_json(report.alpha);
    j["N"] = report.nvars;
    Json coeffs = Json::object();
    for (const auto& [e, c] : report.zeta.terms()) {
        std::ostringstream key;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) key << ',';
            key << e[i];
        }
        coeffs[key.str()] = c.str();
    }
    j["zeta"] = coeffs;
    j["denominator_lcm"] = report.denominator_lcm.str();
    Json poles = Json::array();
    for (const PoleFactor& p : report.pole_factors)
        poles.push_back(Json{{"m", int_json(p.m)}, {"n", int_json(p.n)},
                             {"multiplicity", p.multiplicity}});
    j["pole_factors"] = poles;
    j["knop_sahi_ok"] = report.knop_sahi_ok;
    j["trailing_coeff_ok"] = report.trailing_coeff_ok;
    j["trailing_applicable"] = report.trailing_applicable;
    j["poles_within_hooks"] = report.poles_within_hooks;
    return j;
}

Json partners_json(const Composition& alpha, const Int& m, const Int& n,
                   const std::vector<Composition>& partners) {
    Json j;
    j["alpha"] = composition_json(alpha);
    j["m"] = int_json(m);
    j["n"] = int_json(n);
    Json arr = Json::array();
    for (const Composition& p : partners) arr.push_back(composition_json(p));
    j["partners"] = arr;
    return j;
}

std::string uniqueness_report_lines(const UniquenessReport& report) {
    std::ostringstream os;
    for (const UniquenessRecord& rec : report.records) {
        Json j;
        j["alpha"] = composition_json(rec.alpha);
        j["m"] = int_json(rec.m);
        j["n"] = int_json(rec.n);
        j["node_factor"] = Json{{"m", int_json(rec.node_m)}, {"n", int_json(rec.node_n)}};
        j["multiplicity"] = rec.multiplicity;
        j["coprime"] = rec.coprime;
        j["n_max"] = rec.n_max;
        Json arr = Json::array();
        for (const Composition& p : rec.partners) arr.push_back(composition_json(p));
        j["partners"] = arr;
        j["flagged"] = rec.flagged;
        os << j.dump() << '\n';
    }
    return os.str();
}

std::string negative_report_lines(const NegativeExistenceReport& report) {
    std::ostringstream os;
    Json summary;
    summary["alphas"] = report.alphas;
    summary["pairs_checked"] = report.pairs_checked;
    summary["parallel_pairs"] = report.parallel_pairs;
    summary["violations"] = report.violations.size();
    os << summary.dump() << '\n';
    for (const NegativeExistenceViolation& v : report.violations) {
        Json j;
        j["alpha"] = composition_json(v.alpha);
        j["beta"] = composition_json(v.beta);
        j["m"] = int_json(v.m);
        j["n"] = int_json(v.n);
        j["flagged"] = true;
        os << j.dump() << '\n';
    }
    return os.str();
}

}  // namespace hookpairs
