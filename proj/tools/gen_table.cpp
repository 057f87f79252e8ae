// Emits src/classification_table.cpp from the oracle computation.
// Usage: build/tools/gen_table > src/classification_table.cpp

#include <cstdio>

#include "cubetti/oracle.hpp"

int main()
{
    const auto table = cubetti::oracle::generate_classification_table();

    std::printf("// Generated by tools/gen_table; do not edit by hand.\n");
    std::printf("// Regenerate with: build/tools/gen_table > src/classification_table.cpp\n");
    std::printf("// The oracle test suite checks this constant byte-for-byte against the\n");
    std::printf("// first-principles computation.\n\n");
    std::printf("#include \"cubetti/morse.hpp\"\n\n");
    std::printf("namespace cubetti {\n\n");
    std::printf("namespace {\n");
    std::printf("constexpr VertexClass R = VertexClass::Regular;\n");
    std::printf("constexpr VertexClass I0 = VertexClass::Index0;\n");
    std::printf("constexpr VertexClass I1 = VertexClass::Index1;\n");
    std::printf("constexpr VertexClass I2 = VertexClass::Index2;\n");
    std::printf("constexpr VertexClass MS = VertexClass::MonkeySaddle;\n");
    std::printf("constexpr VertexClass FB = VertexClass::Forbidden;\n");
    std::printf("} // namespace\n\n");
    std::printf("const std::array<VertexClass, 256> kVertexClassTable = {\n");
    for (int row = 0; row < 16; ++row) {
        std::printf("    ");
        for (int col = 0; col < 16; ++col) {
            const auto c = table[row * 16 + col];
            const char* name = "R ";
            switch (c) {
            case cubetti::VertexClass::Regular: name = "R "; break;
            case cubetti::VertexClass::Index0: name = "I0"; break;
            case cubetti::VertexClass::Index1: name = "I1"; break;
            case cubetti::VertexClass::Index2: name = "I2"; break;
            case cubetti::VertexClass::MonkeySaddle: name = "MS"; break;
            case cubetti::VertexClass::Forbidden: name = "FB"; break;
            }
            std::printf("%s,%s", name, col == 15 ? "" : " ");
        }
        std::printf(" // 0x%02X\n", row * 16);
    }
    std::printf("};\n\n");
    std::printf("} // namespace cubetti\n");
    return 0;
}
