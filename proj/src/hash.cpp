#include "bmtsim/hash.hpp"

#include <bit>
#include <cstring>

namespace bmtsim {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int b) {
    return (x << b) | (x >> (64 - b));
}

inline std::uint64_t load64(const std::uint8_t* p) {
    std::uint64_t v;
    std::memcpy(&v, p, 8);
    return v;  // little-endian hosts only; enforced in CMake via static_assert below
}

inline void sipround(std::uint64_t& v0, std::uint64_t& v1, std::uint64_t& v2,
                     std::uint64_t& v3) {
    v0 += v1; v1 = rotl(v1, 13); v1 ^= v0; v0 = rotl(v0, 32);
    v2 += v3; v3 = rotl(v3, 16); v3 ^= v2;
    v0 += v3; v3 = rotl(v3, 21); v3 ^= v0;
    v2 += v1; v1 = rotl(v1, 17); v1 ^= v2; v2 = rotl(v2, 32);
}

}  // namespace

std::uint64_t siphash24(const HashKey& key, std::span<const std::uint8_t> data) {
    static_assert(std::endian::native == std::endian::little,
                  "block layout assumes a little-endian host");
    const std::uint64_t k0 = load64(key.data());
    const std::uint64_t k1 = load64(key.data() + 8);

    std::uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
    std::uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
    std::uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
    std::uint64_t v3 = 0x7465646279746573ULL ^ k1;

    const std::uint8_t* in = data.data();
    const std::size_t len = data.size();
    const std::size_t end = len - (len % 8);

    for (std::size_t i = 0; i < end; i += 8) {
        std::uint64_t m = load64(in + i);
        v3 ^= m;
        sipround(v0, v1, v2, v3);
        sipround(v0, v1, v2, v3);
        v0 ^= m;
    }

    std::uint64_t b = static_cast<std::uint64_t>(len) << 56;
    for (std::size_t i = end; i < len; ++i)
        b |= static_cast<std::uint64_t>(in[i]) << (8 * (i - end));

    v3 ^= b;
    sipround(v0, v1, v2, v3);
    sipround(v0, v1, v2, v3);
    v0 ^= b;

    v2 ^= 0xff;
    sipround(v0, v1, v2, v3);
    sipround(v0, v1, v2, v3);
    sipround(v0, v1, v2, v3);
    sipround(v0, v1, v2, v3);

    return v0 ^ v1 ^ v2 ^ v3;
}

Digest digest_of(const NodeBlock& block, const NodeId& node, const HashKey& key,
                 const TreeGeometry& g) {
    const unsigned dsize = g.digest_size();
    Digest d;
    d.size = static_cast<std::uint8_t>(dsize);

    // position tag | block bytes | output-chunk index
    std::array<std::uint8_t, 9 + TreeGeometry::kNodeSize + 1> buf;
    buf[0] = static_cast<std::uint8_t>(node.level);
    for (unsigned i = 0; i < 8; ++i)
        buf[1 + i] = static_cast<std::uint8_t>(node.index >> (8 * i));
    std::memcpy(buf.data() + 9, block.bytes.data(), TreeGeometry::kNodeSize);

    for (unsigned chunk = 0; chunk * 8 < dsize; ++chunk) {
        buf[9 + TreeGeometry::kNodeSize] = static_cast<std::uint8_t>(chunk);
        std::uint64_t h = siphash24(key, std::span(buf.data(), buf.size()));
        const unsigned n = dsize - chunk * 8 < 8 ? dsize - chunk * 8 : 8;
        for (unsigned i = 0; i < n; ++i)
            d.bytes[chunk * 8 + i] = static_cast<std::uint8_t>(h >> (8 * i));
    }
    return d;
}

}  // namespace bmtsim
