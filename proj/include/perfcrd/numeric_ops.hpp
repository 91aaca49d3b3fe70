#pragma once
#include <cmath>

#include "perfcrd/tape.hpp"

namespace perfcrd {

// Numeric backends for simulation code written once and run two ways:
// plain doubles for evaluation and finite differences, tape variables for
// reverse-mode gradients.

struct DoubleOps {
    using Value = double;
    static constexpr bool recording = false;

    double constant(double c) const { return c; }
    double zero() const { return 0.0; }
    double one() const { return 1.0; }
    double add(double a, double b) const { return a + b; }
    double sub(double a, double b) const { return a - b; }
    double mul(double a, double b) const { return a * b; }
    double div(double a, double b) const { return a / b; }
    double neg(double a) const { return -a; }
    double add_const(double a, double c) const { return a + c; }
    double mul_const(double a, double c) const { return a * c; }
    double rsub_const(double c, double a) const { return c - a; }
    double log(double a) const { return std::log(a); }
    double exp(double a) const { return std::exp(a); }
    double sigmoid(double a) const { return 1.0 / (1.0 + std::exp(-a)); }
    double tanh(double a) const { return std::tanh(a); }
    double clamp(double a, double lo, double hi) const { return a < lo ? lo : (a > hi ? hi : a); }
    double value_of(double a) const { return a; }
};

struct TapeOps {
    using Value = ad::Var;
    static constexpr bool recording = true;

    ad::Tape* tape = nullptr;
    ad::Var zero_{};
    ad::Var one_{};

    explicit TapeOps(ad::Tape& t) : tape(&t) {}

    ad::Var constant(double c) const { return tape->constant(c); }
    ad::Var zero() {
        if (!zero_.valid()) zero_ = tape->constant(0.0);
        return zero_;
    }
    ad::Var one() {
        if (!one_.valid()) one_ = tape->constant(1.0);
        return one_;
    }
    ad::Var add(ad::Var a, ad::Var b) const { return tape->add(a, b); }
    ad::Var sub(ad::Var a, ad::Var b) const { return tape->sub(a, b); }
    ad::Var mul(ad::Var a, ad::Var b) const { return tape->mul(a, b); }
    ad::Var div(ad::Var a, ad::Var b) const { return tape->div(a, b); }
    ad::Var neg(ad::Var a) const { return tape->neg(a); }
    ad::Var add_const(ad::Var a, double c) const { return tape->add_const(a, c); }
    ad::Var mul_const(ad::Var a, double c) const { return tape->mul_const(a, c); }
    ad::Var rsub_const(double c, ad::Var a) const { return tape->rsub_const(c, a); }
    ad::Var log(ad::Var a) const { return tape->log(a); }
    ad::Var exp(ad::Var a) const { return tape->exp(a); }
    ad::Var sigmoid(ad::Var a) const { return tape->sigmoid(a); }
    ad::Var tanh(ad::Var a) const { return tape->tanh(a); }
    ad::Var clamp(ad::Var a, double lo, double hi) const { return tape->clamp(a, lo, hi); }
    double value_of(ad::Var a) const { return tape->val(a); }
};

}  // namespace perfcrd
