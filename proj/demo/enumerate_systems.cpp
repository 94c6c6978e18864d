// Walks the first few terms of each built-in iteration system side by side,
// then shows a fixed-base and a fixed-length numeral hierarchy.

#include "ea/systems.hpp"

#include <cstdio>

using namespace ea;

int main() {
    std::vector<HfSystem> systems = {vn_system(), z_system(), ch_system(),
                                     lex_system(), ack_system(), ack0_system()};
    std::printf("%-6s", "k");
    for (const HfSystem& s : systems) std::printf("%-12s", s.name.c_str());
    std::printf("\n");
    for (std::size_t k = 0; k < 8; ++k) {
        std::printf("%-6zu", k);
        for (const HfSystem& s : systems) {
            Nat code = s.nth_term(k).code();
            std::printf("%-12s", ("#" + nat_str(code)).c_str());
        }
        std::printf("\n");
    }

    std::printf("\nbase-3 numerals over the binary-expansion naturals:\n");
    BaseSystem bs(z_system(), canonical_base(3));
    for (const Numeral& n : bs.first_terms(12))
        std::printf("  %-4s = %s\n", nat_str(n.coded_value()).c_str(), to_text(n).c_str());

    std::printf("\ntwo-digit numerals with a growing base:\n");
    LengthSystem ls(ack0_system(), ack_term(2));
    for (const Numeral& n : ls.first_terms(12))
        std::printf("  %-4s = %s (base size %zu)\n", nat_str(n.coded_value()).c_str(),
                    to_text(n).c_str(), n.base().size());
    return 0;
}
