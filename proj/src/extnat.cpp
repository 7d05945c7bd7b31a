#include "graphck/extnat.hpp"

#include "graphck/errors.hpp"

namespace graphck {

std::uint64_t ExtNat::value() const {
    if (is_inf()) {
        throw DomainError("infinite multiplicity has no finite value");
    }
    return raw_;
}

ExtNat ExtNat::dec() const {
    if (raw_ == 0) {
        throw DomainError("decrement of 0");
    }
    return is_inf() ? *this : ExtNat(raw_ - 1);
}

ExtNat ExtNat::minus(std::uint64_t k) const {
    if (is_inf()) {
        return *this;
    }
    if (k > raw_) {
        throw DomainError("subtraction below 0");
    }
    return ExtNat(raw_ - k);
}

ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_inf() || b.is_inf()) {
        return kInf;
    }
    if (a.raw_ >= ExtNat::kInf - b.raw_) {
        throw DomainError("finite multiplicity overflow");
    }
    return ExtNat(a.raw_ + b.raw_);
}

ExtNat operator*(ExtNat a, ExtNat b) {
    if (a.is_zero() || b.is_zero()) {
        return ExtNat(0);
    }
    if (a.is_inf() || b.is_inf()) {
        return kInf;
    }
    if (a.raw_ > (ExtNat::kInf - 1) / b.raw_) {
        throw DomainError("finite multiplicity overflow");
    }
    return ExtNat(a.raw_ * b.raw_);
}

std::string ExtNat::to_string() const {
    return is_inf() ? std::string("inf") : std::to_string(raw_);
}

ExtNat extnat_arith(ExtNat a, ExtNat b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::mul: return a * b;
    case ArithOp::dec: return a.dec();
    }
    throw InternalError("unknown arithmetic operation");
}

} // namespace graphck
