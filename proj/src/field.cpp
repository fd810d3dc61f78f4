#include "siltlab/field.hpp"

namespace siltlab {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const std::int64_t& as_res(const Scalar& s) {
    if (!std::holds_alternative<std::int64_t>(s))
        throw SiltError(ErrorCode::InvalidArgument, "rational scalar used in a prime field");
    return std::get<std::int64_t>(s);
}

const mpq_class& as_rat(const Scalar& s) {
    if (!std::holds_alternative<mpq_class>(s))
        throw SiltError(ErrorCode::InvalidArgument, "prime-field scalar used over Q");
    return std::get<mpq_class>(s);
}

// Extended Euclid modular inverse; m prime, 0 < a < m.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    std::int64_t inv = old_s % m;
    return inv < 0 ? inv + m : inv;
}

}  // namespace

Field Field::fp(std::int64_t p) {
    if (p > (std::int64_t(1) << 31) || !is_prime(p))
        throw SiltError(ErrorCode::InvalidArgument,
                        "field order must be a prime <= 2^31, got " + std::to_string(p));
    return Field(FieldKind::Prime, p);
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::parse(const std::string& spec) {
    if (spec == "Q") return rationals();
    if (spec.rfind("Fp:", 0) == 0) {
        try {
            return fp(std::stoll(spec.substr(3)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw SiltError(ErrorCode::InvalidArgument, "cannot parse field spec '" + spec + "'");
}

std::string Field::name() const {
    return kind_ == FieldKind::Prime ? "Fp:" + std::to_string(p_) : "Q";
}

Scalar Field::zero() const {
    return kind_ == FieldKind::Prime ? Scalar(std::int64_t(0)) : Scalar(mpq_class(0));
}

Scalar Field::one() const {
    return kind_ == FieldKind::Prime ? Scalar(std::int64_t(1)) : Scalar(mpq_class(1));
}

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == FieldKind::Prime) return norm(n);
    return mpq_class(static_cast<long>(n));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Prime) return norm(as_res(a) + as_res(b));
    return mpq_class(as_rat(a) + as_rat(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Prime) return norm(as_res(a) - as_res(b));
    return mpq_class(as_rat(a) - as_rat(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    // p <= 2^31, so products of residues stay below 2^62.
    if (kind_ == FieldKind::Prime) return norm(as_res(a) * as_res(b));
    return mpq_class(as_rat(a) * as_rat(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::Prime) return norm(-as_res(a));
    return mpq_class(-as_rat(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw SiltError(ErrorCode::InvalidArgument, "division by zero");
    if (kind_ == FieldKind::Prime) return mod_inverse(as_res(a), p_);
    return mpq_class(1 / as_rat(a));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == FieldKind::Prime) return as_res(a) == 0;
    return sgn(as_rat(a)) == 0;
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::Prime) return as_res(a) == as_res(b);
    return as_rat(a) == as_rat(b);
}

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == FieldKind::Prime) return std::to_string(as_res(a));
    return as_rat(a).get_str();
}

Scalar Field::parse_scalar(const std::string& s) const {
    try {
        if (kind_ == FieldKind::Prime) {
            if (s.find('/') != std::string::npos) {
                mpq_class q(s);
                q.canonicalize();
                // Reduce num/den mod p; den must be a unit.
                std::int64_t num = norm(mpz_fdiv_ui(q.get_num_mpz_t(), p_));
                std::int64_t den = norm(mpz_fdiv_ui(q.get_den_mpz_t(), p_));
                if (den == 0)
                    throw SiltError(ErrorCode::InvalidArgument,
                                    "denominator of '" + s + "' vanishes mod " + std::to_string(p_));
                return norm(num * mod_inverse(den, p_));
            }
            mpz_class z(s);
            return norm(mpz_fdiv_ui(z.get_mpz_t(), p_));
        }
        mpq_class q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw SiltError(ErrorCode::InvalidArgument, "cannot parse scalar '" + s + "'");
    }
}

}  // namespace siltlab
