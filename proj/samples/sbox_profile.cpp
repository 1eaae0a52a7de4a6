// SPDX-License-Identifier: Apache-2.0
//
// Prints the r-dimensional profile of the 4-bit field-inversion S-box and the
// best r = 1 linear approximation found through the Walsh-Hadamard path.

#include <iostream>

#include <rdnl/rdnl.hpp>
#include <rdnl/report_io.hpp>

int main() {
    const auto S = rdnl::gf_inverse_sbox(4, 0x13);
    std::cout << "S-box: " << rdnl::to_hex(S) << "\n\n" << rdnl::io::markdown_header();
    for (unsigned r = 1; r <= 7; ++r)
        std::cout << rdnl::io::markdown_row(rdnl::analyze(S, r));

    const auto fast = rdnl::analyze_r1_fast(S);
    std::cout << "\nbest linear approximation: " << rdnl::format_row(fast.U_q().rows[0], 8, 4) << " with q = "
              << rdnl::io::join(rdnl::format_fractions(fast.q(), true), ", ") << "\n";
}
