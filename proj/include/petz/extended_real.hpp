#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

#include "petz/errors.hpp"

namespace petz {

// Why a divergence evaluated to +infinity. SupportViolation marks a support
// mismatch (mass where the reference distribution has none), DivergentSum a
// genuinely divergent series, DomainViolation an operator whose domain
// condition fails before any sum is formed.
enum class InfReason : std::uint8_t {
    SupportViolation,
    DivergentSum,
    DomainViolation,
};

// A value in [-inf, +inf]. Finite values are never NaN; +inf carries a reason.
class ExtendedReal {
  public:
    enum class Kind : std::uint8_t { Finite, PlusInf, MinusInf };

    static ExtendedReal finite(double v) {
        if (std::isnan(v)) throw Error("ExtendedReal: NaN is not a finite value");
        if (std::isinf(v)) throw Error("ExtendedReal: use plus_inf/minus_inf for infinities");
        ExtendedReal r;
        r.kind_ = Kind::Finite;
        r.value_ = v;
        return r;
    }
    static ExtendedReal plus_inf(InfReason reason) {
        ExtendedReal r;
        r.kind_ = Kind::PlusInf;
        r.reason_ = reason;
        return r;
    }
    static ExtendedReal minus_inf() {
        ExtendedReal r;
        r.kind_ = Kind::MinusInf;
        return r;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
    bool is_minus_inf() const { return kind_ == Kind::MinusInf; }

    double value() const {
        if (!is_finite()) throw Error("ExtendedReal: value() on non-finite");
        return value_;
    }
    InfReason reason() const {
        if (!is_plus_inf()) throw Error("ExtendedReal: reason() on non-infinite");
        return reason_;
    }

    // Numeric view with IEEE infinities, for ordering checks.
    double as_double() const {
        switch (kind_) {
            case Kind::Finite: return value_;
            case Kind::PlusInf: return std::numeric_limits<double>::infinity();
            case Kind::MinusInf: return -std::numeric_limits<double>::infinity();
        }
        return 0.0;
    }

  private:
    Kind kind_ = Kind::Finite;
    double value_ = 0.0;
    InfReason reason_ = InfReason::SupportViolation;
};

enum class LogBase : std::uint8_t { Natural, Two };

// Rescale a natural-log divergence value to the requested base.
inline ExtendedReal in_base(const ExtendedReal& v, LogBase base) {
    if (base == LogBase::Natural || !v.is_finite()) return v;
    return ExtendedReal::finite(v.value() / std::log(2.0));
}

inline std::string reason_tag(InfReason r) {
    switch (r) {
        case InfReason::SupportViolation: return "support";
        case InfReason::DivergentSum: return "divergent";
        case InfReason::DomainViolation: return "domain";
    }
    return "?";
}

// Order parameter for the Renyi family: 0, interior (0,1)u(1,inf), 1, inf.
class AlphaOrder {
  public:
    enum class Kind : std::uint8_t { Zero, Interior, One, Infinity };

    static AlphaOrder zero() { return AlphaOrder(Kind::Zero, 0.0); }
    static AlphaOrder one() { return AlphaOrder(Kind::One, 1.0); }
    static AlphaOrder infinity() {
        return AlphaOrder(Kind::Infinity, std::numeric_limits<double>::infinity());
    }
    static AlphaOrder interior(double a) {
        if (!(a > 0.0) || std::isinf(a)) throw Error("AlphaOrder: interior order must be in (0,inf)");
        if (a == 0.0) throw Error("AlphaOrder: interior order must be positive");
        // 1/(alpha-1) is catastrophically ill-conditioned this close to 1;
        // callers must ask for order One instead.
        if (std::abs(a - 1.0) < 1e-12) throw Error("AlphaOrder: order too close to 1, use One");
        return AlphaOrder(Kind::Interior, a);
    }
    // Maps 0 -> Zero, 1 (within 1e-12) -> One, inf -> Infinity, else Interior.
    static AlphaOrder from_value(double a) {
        if (std::isnan(a) || a < 0.0) throw Error("AlphaOrder: order must be >= 0");
        if (a == 0.0) return zero();
        if (std::isinf(a)) return infinity();
        if (std::abs(a - 1.0) < 1e-12) return one();
        return interior(a);
    }

    Kind kind() const { return kind_; }
    bool is_interior() const { return kind_ == Kind::Interior; }
    // Numeric position on the extended half-line (0, a, 1, +inf).
    double numeric() const { return alpha_; }
    double alpha() const {
        if (kind_ != Kind::Interior) throw Error("AlphaOrder: alpha() on extended order");
        return alpha_;
    }
    std::string label() const {
        switch (kind_) {
            case Kind::Zero: return "0";
            case Kind::One: return "1";
            case Kind::Infinity: return "inf";
            case Kind::Interior: break;
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", alpha_);
        return buf;
    }

  private:
    AlphaOrder(Kind k, double a) : kind_(k), alpha_(a) {}
    Kind kind_;
    double alpha_;
};

}  // namespace petz
