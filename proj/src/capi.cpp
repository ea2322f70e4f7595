#include "fermatlat.h"

#include "bounds.hpp"
#include "errors.hpp"
#include "fermat.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <sstream>
#include <string>

struct fermatlat_model {
    fermatlat::FermatModel impl;
};

struct fermatlat_bound {
    fermatlat::BoundExpression impl;
};

struct fermatlat_report {
    fermatlat::PrimeReport impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fermatlat_status status_of(const std::exception& e) {
    g_last_error = e.what();
    if (dynamic_cast<const fermatlat::NotPrime*>(&e))
        return FERMATLAT_ERR_NOT_PRIME;
    if (dynamic_cast<const fermatlat::BadSplit*>(&e))
        return FERMATLAT_ERR_BAD_SPLIT;
    return FERMATLAT_ERR_INTERNAL;
}

template <typename Fn>
fermatlat_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FERMATLAT_OK;
    } catch (const std::exception& e) {
        return status_of(e);
    } catch (...) {
        g_last_error = "unknown error";
        return FERMATLAT_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* fermatlat_version(void) {
    return "1.0.0";
}

const char* fermatlat_status_message(fermatlat_status status) {
    switch (status) {
    case FERMATLAT_OK: return "ok";
    case FERMATLAT_ERR_NOT_PRIME: return "argument is not a prime greater than 3";
    case FERMATLAT_ERR_BAD_SPLIT: return "split violates 2r + s = p - 3";
    case FERMATLAT_ERR_BAD_ARGUMENT: return "bad argument";
    case FERMATLAT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* fermatlat_last_error(void) {
    return g_last_error.c_str();
}

void fermatlat_string_free(char* s) {
    std::free(s);
}

fermatlat_status fermatlat_model_build(long p, fermatlat_model** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] { *out = new fermatlat_model{fermatlat::build_fermat_model(p)}; });
}

fermatlat_status fermatlat_model_build_with_split(long p, long r, long s, fermatlat_model** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    *out = nullptr;
    return guarded(
        [&] { *out = new fermatlat_model{fermatlat::build_fermat_model_with_split(p, r, s)}; });
}

void fermatlat_model_free(fermatlat_model* model) {
    delete model;
}

long fermatlat_model_p(const fermatlat_model* model) {
    return model ? model->impl.p() : 0;
}

long fermatlat_model_component_count(const fermatlat_model* model) {
    return model ? static_cast<long>(model->impl.cfg().size()) : 0;
}

fermatlat_status fermatlat_model_split(const fermatlat_model* model, long* r, long* s) {
    if (!model || !r || !s) {
        g_last_error = "null argument";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    *r = model->impl.r();
    *s = model->impl.s();
    return FERMATLAT_OK;
}

char* fermatlat_model_json(const fermatlat_model* model) {
    return model ? dup_string(model->impl.to_json()) : nullptr;
}

char* fermatlat_model_dot(const fermatlat_model* model) {
    return model ? dup_string(model->impl.to_dot()) : nullptr;
}

fermatlat_status fermatlat_bound_compute(long p, int minimal, int folded, fermatlat_bound** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    *out = nullptr;
    if (folded && !minimal) {
        g_last_error = "folding applies to the minimal-model bound";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    return guarded([&] {
        fermatlat::BoundExpression expr =
            minimal ? fermatlat::bound_minimal(p) : fermatlat::bound_regular(p);
        if (folded)
            expr = fermatlat::fold_cyclotomic(expr);
        *out = new fermatlat_bound{std::move(expr)};
    });
}

void fermatlat_bound_free(fermatlat_bound* bound) {
    delete bound;
}

char* fermatlat_bound_text(const fermatlat_bound* bound) {
    return bound ? dup_string(fermatlat::render_text(bound->impl)) : nullptr;
}

char* fermatlat_bound_json(const fermatlat_bound* bound) {
    return bound ? dup_string(fermatlat::render_json(bound->impl)) : nullptr;
}

char* fermatlat_bound_logp_coeff(const fermatlat_bound* bound) {
    return bound ? dup_string(bound->impl.logp_coeff.str()) : nullptr;
}

fermatlat_status fermatlat_bound_coeffs(long p, char** regular, char** minimal, char** folded) {
    if (!regular || !minimal || !folded) {
        g_last_error = "null output pointer";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    *regular = *minimal = *folded = nullptr;
    return guarded([&] {
        const fermatlat::BoundSet set = fermatlat::bound_set(p);
        *regular = dup_string(set.regular.logp_coeff.str());
        *minimal = dup_string(set.minimal.logp_coeff.str());
        *folded = dup_string(set.folded.logp_coeff.str());
    });
}

fermatlat_status fermatlat_verify_prime(long p, int inject_fault, fermatlat_report** out) {
    if (!out) {
        g_last_error = "null output pointer";
        return FERMATLAT_ERR_BAD_ARGUMENT;
    }
    *out = nullptr;
    return guarded(
        [&] { *out = new fermatlat_report{fermatlat::verify_prime(p, inject_fault != 0)}; });
}

void fermatlat_report_free(fermatlat_report* report) {
    delete report;
}

int fermatlat_report_ok(const fermatlat_report* report) {
    return report && report->impl.ok() ? 1 : 0;
}

char* fermatlat_report_json(const fermatlat_report* report) {
    return report ? dup_string(report->impl.to_json()) : nullptr;
}

char* fermatlat_report_row(const fermatlat_report* report) {
    if (!report)
        return nullptr;
    const auto& r = report->impl;
    std::ostringstream os;
    os << std::setw(6) << r.p << std::setw(5) << r.r << std::setw(5) << r.s << "  " << std::left
       << std::setw(12) << r.a_p.str() << std::right;
    if (r.ok()) {
        os << "pass";
    } else {
        os << "FAIL(";
        const auto names = r.failed_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            os << (i ? "," : "") << names[i];
        os << ")";
    }
    return dup_string(os.str());
}

} // extern "C"
