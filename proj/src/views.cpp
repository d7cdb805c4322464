#include "spray/views.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>

namespace spray {

namespace {

class Sha256 {
public:
    Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
        if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
            throw Error("failed to initialise SHA-256");
    }

    void update_u64(std::uint64_t v) {
        std::array<unsigned char, 8> bytes{};
        for (std::size_t i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
        EVP_DigestUpdate(ctx_.get(), bytes.data(), bytes.size());
    }

    std::string hex() {
        std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(2 * len);
        for (unsigned int i = 0; i < len; ++i) {
            out.push_back(digits[md[i] >> 4]);
            out.push_back(digits[md[i] & 0xf]);
        }
        return out;
    }

private:
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string order_hash(const Spray& p) {
    Sha256 h;
    h.update_u64(p.arity());
    h.update_u64(p.size());
    p.for_each([&](const MultiIndex& idx, double v) {
        for (auto e : idx) h.update_u64(static_cast<std::uint64_t>(static_cast<std::int64_t>(e)));
        h.update_u64(std::bit_cast<std::uint64_t>(v));
    });
    return h.hex();
}

CoeffView coeffs(const Spray& p) {
    std::vector<double> out;
    out.reserve(p.size());
    p.for_each([&](const MultiIndex&, double v) { out.push_back(v); });
    return CoeffView(std::move(out), order_hash(p));
}

IndexView indices(const Spray& p) {
    std::vector<MultiIndex> out;
    out.reserve(p.size());
    p.for_each([&](const MultiIndex& idx, double) { out.push_back(idx); });
    return IndexView(std::move(out), order_hash(p));
}

double sum(const CoeffView& v) {
    std::vector<double> xs(v.begin(), v.end());
    std::sort(xs.begin(), xs.end());
    // Neumaier compensated summation.
    double s = 0.0;
    double c = 0.0;
    for (double x : xs) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    return s + c;
}

Spray zip(const IndexView& idx, const CoeffView& vals, std::size_t arity, Backend backend) {
    if (!compatible(idx, vals))
        throw HashMismatchError("views come from different extraction states (" + idx.order_hash() +
                                " vs " + vals.order_hash() + ")");
    return Spray(idx.elements(), vals.elements(), arity, backend);
}

double constant(const Spray& p) {
    return p.get(MultiIndex(p.arity()));
}

Spray constant_term(const Spray& p) {
    Spray out(p.arity(), p.backend());
    out.assign(MultiIndex(p.arity()), constant(p));
    return out;
}

}  // namespace spray
