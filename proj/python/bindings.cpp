// Python bindings for the main operations.  Compositions cross the boundary
// as plain lists of nonnegative integers; reports come back as dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hookpairs/critical.hpp"
#include "hookpairs/jack.hpp"
#include "hookpairs/oracle.hpp"
#include "hookpairs/textio.hpp"

namespace py = pybind11;
namespace hp = hookpairs;

namespace {

hp::Composition to_comp(const std::vector<long long>& parts) {
    std::vector<hp::Int> p(parts.begin(), parts.end());
    return hp::Composition(std::move(p));
}

std::vector<long long> from_comp(const hp::Composition& c, bool trim = true) {
    hp::Composition t = trim ? c.trimmed() : c;
    std::vector<long long> out;
    for (int i = 1; i <= t.ambient(); ++i) out.push_back(hp::checked_ll(t.part(i), "part"));
    return out;
}

py::dict trace_dict(const hp::AlgorithmTrace& tr) {
    py::dict d;
    d["l"] = tr.shift_l;
    d["m"] = tr.m;
    d["n"] = hp::checked_ll(tr.n, "n");
    d["N"] = tr.ambient;
    d["T"] = tr.T;
    d["t"] = tr.t;
    d["k"] = tr.k;
    d["T0"] = tr.T0;
    d["w"] = tr.w;
    py::list xi;
    for (const hp::DeformedValue& v : tr.xi)
        xi.append(py::make_tuple(hp::checked_ll(v.base, "xi"), v.upsilon_count));
    d["xi"] = xi;
    return d;
}

hp::SearchBounds make_bounds(int n_max, const std::string& mode, int factorial_cap,
                             bool extended) {
    hp::SearchBounds b;
    b.n_max = n_max;
    b.factorial_cap = factorial_cap;
    b.extended = extended;
    if (mode == "rank") b.mode = hp::SearchMode::RankPermutation;
    else if (mode == "naive") b.mode = hp::SearchMode::NaiveComposition;
    else throw hp::DomainError("mode must be rank or naive");
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hook-length products, critical pairs and nonsymmetric Jack polynomials";

    py::register_exception<hp::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<hp::ParseError>(m, "CompositionParseError", PyExc_ValueError);

    m.def("parse_composition",
          [](const std::string& text) { return from_comp(hp::parse_composition(text), false); },
          py::arg("text"));

    m.def("rank_vector",
          [](const std::vector<long long>& alpha) { return hp::rank_vector(to_comp(alpha)); },
          py::arg("alpha"));

    m.def("sort_info",
          [](const std::vector<long long>& alpha) {
              hp::SortInfo info = hp::sort_info(to_comp(alpha));
              return py::make_tuple(info.w, from_comp(info.alpha_plus, false));
          },
          py::arg("alpha"), "returns (w, alpha_plus) with r(alpha, w[i-1]) = i");

    m.def("dominates",
          [](const std::vector<long long>& a, const std::vector<long long>& b) {
              return hp::dominates(to_comp(a), to_comp(b));
          },
          py::arg("alpha"), py::arg("beta"));

    m.def("triangle_greater",
          [](const std::vector<long long>& a, const std::vector<long long>& b) {
              return hp::triangle_greater(to_comp(a), to_comp(b));
          },
          py::arg("alpha"), py::arg("beta"));

    m.def("leg_length",
          [](const std::vector<long long>& alpha, int row, int col) {
              return hp::leg_length(to_comp(alpha), hp::Node{row, col});
          },
          py::arg("alpha"), py::arg("row"), py::arg("col"));

    m.def("hook_factors",
          [](const std::vector<long long>& alpha) {
              py::list out;
              for (const hp::HookFactor& f : hp::hook_factors_all(to_comp(alpha))) {
                  py::dict d;
                  d["row"] = f.node.row;
                  d["col"] = f.node.col;
                  d["m"] = hp::checked_ll(boost::multiprecision::numerator(f.slope), "m");
                  d["n"] = hp::checked_ll(boost::multiprecision::numerator(f.intercept), "n");
                  out.append(d);
              }
              return out;
          },
          py::arg("alpha"), "factors of h(alpha, kappa+1) as {row, col, m, n}");

    m.def("factor_multiplicity",
          [](const std::vector<long long>& alpha, long long mm, long long nn) {
              return hp::factor_multiplicity(to_comp(alpha), mm, nn);
          },
          py::arg("alpha"), py::arg("m"), py::arg("n"));

    m.def("is_critical_pair",
          [](const std::vector<long long>& a, const std::vector<long long>& b, long long mm,
             long long nn, bool extended) -> py::object {
              auto cert = hp::is_critical_pair(to_comp(a), to_comp(b), mm, nn, extended);
              if (!cert) return py::none();
              py::list q;
              for (const hp::Rat& x : cert->quotients) {
                  std::ostringstream os;
                  os << x;
                  q.append(os.str());
              }
              return q;
          },
          py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("n"),
          py::arg("extended") = false,
          "per-index quotients of the divisibility witness, or None");

    m.def("construct_beta",
          [](const std::vector<long long>& alpha, int row, int col) {
              hp::ConstructResult res = hp::construct_beta(to_comp(alpha), hp::Node{row, col});
              py::dict d = trace_dict(res.trace);
              d["beta"] = from_comp(res.beta);
              return d;
          },
          py::arg("alpha"), py::arg("row"), py::arg("col"));

    m.def("chain",
          [](const std::vector<long long>& alpha, int row, int col) {
              py::list out;
              for (const hp::Composition& c : hp::chain(to_comp(alpha), hp::Node{row, col}))
                  out.append(from_comp(c));
              return out;
          },
          py::arg("alpha"), py::arg("row"), py::arg("col"));

    m.def("closure",
          [](const std::vector<long long>& alpha, long long mm, long long nn, int depth) {
              py::list out;
              for (const hp::ClosureEntry& e : hp::closure(to_comp(alpha), mm, nn, depth))
                  out.append(from_comp(e.beta));
              return out;
          },
          py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("depth") = 1);

    m.def("detect_extra_hooks",
          [](const std::vector<long long>& alpha, int row, int col) {
              py::list out;
              for (const auto& [node, f] :
                   hp::detect_extra_hooks(to_comp(alpha), hp::Node{row, col})) {
                  py::dict d;
                  d["row"] = node.row;
                  d["col"] = node.col;
                  d["m"] = hp::checked_ll(boost::multiprecision::numerator(f.slope), "m");
                  d["n"] = hp::checked_ll(boost::multiprecision::numerator(f.intercept), "n");
                  out.append(d);
              }
              return out;
          },
          py::arg("alpha"), py::arg("row"), py::arg("col"));

    m.def("enumerate_partners",
          [](const std::vector<long long>& alpha, long long mm, long long nn, int n_max,
             const std::string& mode, int factorial_cap, bool extended) {
              py::list out;
              for (const hp::Composition& c : hp::enumerate_partners(
                       to_comp(alpha), mm, nn, make_bounds(n_max, mode, factorial_cap, extended)))
                  out.append(from_comp(c));
              return out;
          },
          py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("n_max") = -1,
          py::arg("mode") = "rank", py::arg("factorial_cap") = 9, py::arg("extended") = false);

    m.def("zeta_coefficients",
          [](const std::vector<long long>& alpha, int nvars) {
              py::dict out;
              hp::MultiPoly z = hp::zeta(to_comp(alpha), nvars);
              for (const auto& [e, c] : z.terms()) {
                  py::tuple key(e.size());
                  for (std::size_t i = 0; i < e.size(); ++i) key[i] = py::int_(e[i]);
                  out[key] = c.str();
              }
              return out;
          },
          py::arg("alpha"), py::arg("nvars"),
          "coefficient table of zeta_alpha keyed by exponent tuples");

    m.def("knop_sahi",
          [](const std::vector<long long>& alpha, int nvars) {
              hp::JackReport rep = hp::knop_sahi_report(to_comp(alpha), nvars);
              py::dict d;
              d["alpha"] = from_comp(rep.alpha);
              d["N"] = rep.nvars;
              py::dict coeffs;
              for (const auto& [e, c] : rep.zeta.terms()) {
                  py::tuple key(e.size());
                  for (std::size_t i = 0; i < e.size(); ++i) key[i] = py::int_(e[i]);
                  coeffs[key] = c.str();
              }
              d["zeta"] = coeffs;
              d["denominator_lcm"] = rep.denominator_lcm.str();
              py::list poles;
              for (const hp::PoleFactor& p : rep.pole_factors)
                  poles.append(py::make_tuple(hp::checked_ll(p.m, "m"), hp::checked_ll(p.n, "n"),
                                              p.multiplicity));
              d["pole_factors"] = poles;
              d["knop_sahi_ok"] = rep.knop_sahi_ok;
              d["trailing_coeff_ok"] = rep.trailing_coeff_ok;
              d["trailing_applicable"] = rep.trailing_applicable;
              d["poles_within_hooks"] = rep.poles_within_hooks;
              return d;
          },
          py::arg("alpha"), py::arg("nvars"));

    m.def("xi_specialization_match",
          [](const std::vector<long long>& a, const std::vector<long long>& b, long long mm,
             long long nn) {
              return hp::xi_specialization_match(to_comp(a), to_comp(b), mm, nn);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("m"), py::arg("n"));
}
