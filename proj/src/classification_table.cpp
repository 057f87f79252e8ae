// Generated by tools/gen_table; do not edit by hand.
// Regenerate with: build/tools/gen_table > src/classification_table.cpp
// The oracle test suite checks this constant byte-for-byte against the
// first-principles computation.

#include "cubetti/morse.hpp"

namespace cubetti {

namespace {
constexpr VertexClass R = VertexClass::Regular;
constexpr VertexClass I0 = VertexClass::Index0;
constexpr VertexClass I1 = VertexClass::Index1;
constexpr VertexClass I2 = VertexClass::Index2;
constexpr VertexClass MS = VertexClass::MonkeySaddle;
constexpr VertexClass FB = VertexClass::Forbidden;
} // namespace

const std::array<VertexClass, 256> kVertexClassTable = {
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x00
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x10
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x20
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x30
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x40
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x50
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x60
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x70
    I0, R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x80
    R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , R , // 0x90
    R , R , R , R , R , R , R , R , I1, R , R , R , I1, R , R , R , // 0xA0
    R , R , R , R , R , R , R , R , I1, R , R , R , R , R , R , R , // 0xB0
    R , R , R , R , R , R , R , R , I1, R , I1, R , R , R , R , R , // 0xC0
    R , R , R , R , R , R , R , R , I1, R , R , R , R , R , R , R , // 0xD0
    I1, R , I1, R , I1, R , R , R , MS, R , I1, R , I1, R , R , R , // 0xE0
    R , R , R , R , R , R , R , R , I1, R , R , R , R , R , I2, R , // 0xF0
};

} // namespace cubetti
