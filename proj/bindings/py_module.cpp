#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "carlitz/errors.hpp"
#include "carlitz/expseries.hpp"
#include "carlitz/serialize.hpp"
#include "carlitz/suites.hpp"

namespace py = pybind11;
using namespace carlitz;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

/// One configured field plus its caches; every method speaks the CLI's
/// text grammar for values.
class Context {
  public:
    Context(int p, int gamma, int imax, int m, std::int64_t prec, std::uint64_t seed,
            std::optional<std::vector<int>> modulus)
        : cfg_{} {
        cfg_.p = p;
        cfg_.gamma = gamma;
        cfg_.imax = imax;
        cfg_.m = m;
        cfg_.prec = prec;
        cfg_.seed = seed;
        cfg_.modulus = std::move(modulus);
        cfg_.validate();
        field_ = std::make_unique<Fq>(cfg_.make_field());
        cache_ = std::make_unique<CarlitzCache>(*field_, cfg_.imax);
    }

    int q() const { return field_->q(); }

    std::string bracket(int i) const { return poly_text(*field_, cache_->bracket(i)); }
    std::string d(int i) const { return poly_text(*field_, cache_->D(i)); }
    std::string l(int i) const { return poly_text(*field_, cache_->L(i)); }
    std::string binom(int i, int j) const { return poly_text(*field_, cache_->binom(i, j)); }

    std::vector<std::string> e_coeffs(int i) const {
        std::vector<std::string> out;
        for (const auto& c : e_poly(*cache_, i)) out.push_back(poly_text(*field_, c));
        return out;
    }
    std::vector<std::string> f_coeffs(int i) const {
        std::vector<std::string> out;
        for (const auto& c : f_poly(*cache_, i)) out.push_back(ratfunc_text(*field_, c));
        return out;
    }
    std::string m_at(std::uint64_t j) const {
        return poly_text(*field_, m_seq(*field_, j, default_enumeration(*field_)));
    }
    py::tuple l_kappa(std::uint64_t n) const {
        auto lk = l_and_kappa(*field_, n, default_enumeration(*field_));
        return py::make_tuple(lk.l, lk.kappa);
    }
    std::vector<std::string> expand_h(std::uint64_t n) const {
        std::vector<std::string> out;
        for (const auto& c : expand_h_in_q(*cache_, n, default_enumeration(*field_)))
            out.push_back(ratfunc_text(*field_, c));
        return out;
    }

    CarlitzCoeffs parse_coeffs(const std::vector<std::string>& c) const {
        CarlitzCoeffs out;
        for (const auto& s : c) out.c.push_back(sc_from_ratfunc(parse_ratfunc(*field_, s)));
        return out;
    }
    std::vector<std::string> dump_coeffs(const CarlitzCoeffs& c) const {
        std::vector<std::string> out;
        for (const auto& v : c.c) out.push_back(scalar_text(*field_, v));
        return out;
    }

    std::vector<std::string> raise_op(const std::vector<std::string>& c) const {
        return dump_coeffs(a_plus(*field_, parse_coeffs(c)));
    }
    std::vector<std::string> lower_op(const std::vector<std::string>& c) const {
        return dump_coeffs(a_minus(*field_, parse_coeffs(c), cfg_.effective_ram_cap(q())));
    }
    std::vector<std::string> number(const std::vector<std::string>& c) const {
        return dump_coeffs(number_op(*field_, parse_coeffs(c), cfg_.effective_ram_cap(q())));
    }
    py::dict commutator(const std::vector<std::string>& c) const {
        CommutatorReport r =
            commutator_defect(*field_, parse_coeffs(c), cfg_.effective_ram_cap(q()));
        py::dict out;
        out["lhs"] = dump_coeffs(r.lhs);
        out["rhs"] = dump_coeffs(r.rhs);
        out["equal"] = r.equal;
        out["k_form_equal"] = r.k_form_equal;
        return out;
    }

    std::string eval(const std::vector<std::string>& c, const std::string& t) const {
        Scalar v = eval_coeffs(*cache_, parse_coeffs(c), sc_from_ratfunc(parse_ratfunc(*field_, t)));
        return scalar_text(*field_, v);
    }
    std::string norm_of(const std::vector<std::string>& c) const {
        return absval_text(norm(parse_coeffs(c)));
    }
    std::string sampled_norm_of(const std::vector<std::string>& c, int bound) const {
        return absval_text(sampled_norm(*cache_, parse_coeffs(c), bound));
    }

    py::dict exp(const std::string& z, std::optional<std::int64_t> prec) const {
        std::int64_t p = prec.value_or(cfg_.prec);
        LaurentSeries v =
            carlitz_exp(*cache_, ls_from_ratfunc(*field_, parse_ratfunc(*field_, z), p), p);
        py::dict out;
        out["value"] = laurent_text(*field_, v);
        out["json"] = json_to_py(laurent_json(*field_, v));
        out["prec"] = v.prec;
        return out;
    }
    py::dict log(const std::string& zeta, std::optional<std::int64_t> prec) const {
        std::int64_t p = prec.value_or(cfg_.prec);
        LaurentSeries v = rho(*cache_, ls_from_ratfunc(*field_, parse_ratfunc(*field_, zeta), p), p);
        py::dict out;
        out["value"] = laurent_text(*field_, v);
        out["json"] = json_to_py(laurent_json(*field_, v));
        out["prec"] = v.prec;
        return out;
    }
    py::dict inverse_check(const std::string& zeta, std::optional<std::int64_t> prec) const {
        std::int64_t p = prec.value_or(cfg_.prec);
        InverseReport r =
            verify_inverse(*cache_, ls_from_ratfunc(*field_, parse_ratfunc(*field_, zeta), p), p);
        py::dict out;
        out["equal"] = r.equal;
        out["prec"] = r.prec;
        return out;
    }
    std::vector<std::string> wz(const std::string& z, int m, std::optional<std::int64_t> prec) const {
        std::int64_t p = prec.value_or(cfg_.prec);
        CarlitzCoeffs b =
            wz_coeffs(*cache_, ls_from_ratfunc(*field_, parse_ratfunc(*field_, z), p),
                      std::size_t(m), p);
        return dump_coeffs(b);
    }
    py::dict coherent(const std::string& lambda, const std::string& c0, int m) const {
        Scalar l = sc_from_ratfunc(parse_ratfunc(*field_, lambda));
        Scalar c = sc_from_ratfunc(parse_ratfunc(*field_, c0));
        CarlitzCoeffs u = coherent_state(*field_, l, c, std::size_t(m));
        CarlitzCoeffs lo = a_minus(*field_, u, cfg_.effective_ram_cap(q()));
        bool residual_zero = true;
        for (std::size_t n = 0; n + 1 < u.c.size(); ++n)
            residual_zero =
                residual_zero && sc_is_zero(sc_sub(*field_, lo.c[n], sc_mul(*field_, l, u.c[n])));
        py::dict out;
        out["coeffs"] = dump_coeffs(u);
        out["residual_zero"] = residual_zero;
        return out;
    }

    py::dict verify(const std::string& suite) const {
        SuiteReport r = run_suite(cfg_, suite);
        return py::dict(json_to_py(report_json(r, false)));
    }

  private:
    RunConfig cfg_;
    std::unique_ptr<Fq> field_;
    std::unique_ptr<CarlitzCache> cache_;
};

} // namespace

PYBIND11_MODULE(_carlitz_osc, mod) {
    mod.doc() = "Exact Carlitz-basis ladder calculus over F_q((x))";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const domain_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const precision_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const internal_error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<Context>(mod, "Context")
        .def(py::init<int, int, int, int, std::int64_t, std::uint64_t,
                      std::optional<std::vector<int>>>(),
             py::arg("p") = 2, py::arg("gamma") = 1, py::arg("imax") = 8, py::arg("M") = 8,
             py::arg("prec") = 64, py::arg("seed") = 0, py::arg("modulus") = py::none())
        .def_property_readonly("q", &Context::q)
        .def("bracket", &Context::bracket, py::arg("i"))
        .def("D", &Context::d, py::arg("i"))
        .def("L", &Context::l, py::arg("i"))
        .def("binom", &Context::binom, py::arg("i"), py::arg("j"))
        .def("e_coeffs", &Context::e_coeffs, py::arg("i"))
        .def("f_coeffs", &Context::f_coeffs, py::arg("i"))
        .def("m_seq", &Context::m_at, py::arg("j"))
        .def("l_and_kappa", &Context::l_kappa, py::arg("n"))
        .def("expand_h", &Context::expand_h, py::arg("n"))
        .def("a_plus", &Context::raise_op, py::arg("coeffs"))
        .def("a_minus", &Context::lower_op, py::arg("coeffs"))
        .def("number_op", &Context::number, py::arg("coeffs"))
        .def("commutator", &Context::commutator, py::arg("coeffs"))
        .def("eval", &Context::eval, py::arg("coeffs"), py::arg("t"))
        .def("norm", &Context::norm_of, py::arg("coeffs"))
        .def("sampled_norm", &Context::sampled_norm_of, py::arg("coeffs"), py::arg("bound"))
        .def("exp", &Context::exp, py::arg("z"), py::arg("prec") = py::none())
        .def("rho", &Context::log, py::arg("zeta"), py::arg("prec") = py::none())
        .def("verify_inverse", &Context::inverse_check, py::arg("zeta"),
             py::arg("prec") = py::none())
        .def("wz_coeffs", &Context::wz, py::arg("z"), py::arg("M"), py::arg("prec") = py::none())
        .def("coherent_state", &Context::coherent, py::arg("lambda_"), py::arg("c0"),
             py::arg("M"))
        .def("verify", &Context::verify, py::arg("suite"));

    mod.def("suites", [] { return suite_names(); });
}
