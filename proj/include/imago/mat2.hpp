#pragma once

#include <array>

#include "imago/field.hpp"

namespace imago {

/// 2x2 matrix over a fixed field, entries row-major as element codes.
class Mat2 {
public:
    Mat2(FieldPtr field, Field::Code a, Field::Code b, Field::Code c, Field::Code d)
        : field_(std::move(field)), e_{a, b, c, d} {}

    static Mat2 identity(const FieldPtr& f) { return {f, f->one(), 0, 0, f->one()}; }

    const FieldPtr& field() const { return field_; }
    Field::Code a() const { return e_[0]; }
    Field::Code b() const { return e_[1]; }
    Field::Code c() const { return e_[2]; }
    Field::Code d() const { return e_[3]; }

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator+(const Mat2& o) const;
    Field::Code det() const;
    Mat2 inv() const;  // throws DomainError on singular input
    Mat2 pow(const mpz_class& e) const;

    bool operator==(const Mat2& o) const { return e_ == o.e_; }

    /// Entry-lexicographic encoding in [0, q^4); row-major, a most significant.
    unsigned long code() const {
        unsigned long q = field_->q();
        return ((static_cast<unsigned long>(e_[0]) * q + e_[1]) * q + e_[2]) * q + e_[3];
    }
    static Mat2 from_code(const FieldPtr& f, unsigned long code);

private:
    FieldPtr field_;
    std::array<Field::Code, 4> e_;
};

}  // namespace imago
