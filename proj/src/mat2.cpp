#include "imago/mat2.hpp"

#include "imago/errors.hpp"

namespace imago {

Mat2 Mat2::operator*(const Mat2& o) const {
    const Field& f = *field_;
    return {field_,
            f.add(f.mul(e_[0], o.e_[0]), f.mul(e_[1], o.e_[2])),
            f.add(f.mul(e_[0], o.e_[1]), f.mul(e_[1], o.e_[3])),
            f.add(f.mul(e_[2], o.e_[0]), f.mul(e_[3], o.e_[2])),
            f.add(f.mul(e_[2], o.e_[1]), f.mul(e_[3], o.e_[3]))};
}

Mat2 Mat2::operator+(const Mat2& o) const {
    const Field& f = *field_;
    return {field_, f.add(e_[0], o.e_[0]), f.add(e_[1], o.e_[1]),
            f.add(e_[2], o.e_[2]), f.add(e_[3], o.e_[3])};
}

Field::Code Mat2::det() const {
    const Field& f = *field_;
    return f.sub(f.mul(e_[0], e_[3]), f.mul(e_[1], e_[2]));
}

Mat2 Mat2::inv() const {
    const Field& f = *field_;
    Field::Code dt = det();
    if (dt == 0) throw DomainError("inversion of a singular matrix");
    Field::Code di = f.inv(dt);
    return {field_, f.mul(di, e_[3]), f.mul(di, f.neg(e_[1])),
            f.mul(di, f.neg(e_[2])), f.mul(di, e_[0])};
}

Mat2 Mat2::pow(const mpz_class& e) const {
    mpz_class n = e;
    Mat2 base = *this;
    if (n < 0) {
        base = base.inv();
        n = -n;
    }
    Mat2 out = identity(field_);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

Mat2 Mat2::from_code(const FieldPtr& f, unsigned long code) {
    unsigned long q = f->q();
    Field::Code d = code % q;
    code /= q;
    Field::Code c = code % q;
    code /= q;
    Field::Code b = code % q;
    code /= q;
    Field::Code a = static_cast<Field::Code>(code);
    return {f, a, b, c, d};
}

}  // namespace imago
