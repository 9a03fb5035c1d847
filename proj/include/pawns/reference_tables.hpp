#pragma once

// Published reference values that `pawns tables` and the acceptance suite
// compare against. Keep these as literal data: they are the expected answers,
// not something to recompute.

#include <array>
#include <cstddef>
#include <string_view>

namespace pawns::reference {

/// Lengths m for which the all-open component has value 0, modulo 10.
inline constexpr std::array<std::size_t, 5> kPlainZeroResidues{0, 2, 3, 6, 9};
inline constexpr std::size_t kPlainPeriod = 10;
/// A move to the all-open colon component with m files is loony iff m is
/// one of these modulo 5.
inline constexpr std::array<std::size_t, 2> kPlainLoonyResidues{1, 4};

/// Least word length with value k, for k = 1..16.
inline constexpr std::array<std::size_t, 16> kFirstOccurrence{1,  4,  6,  9,  11, 14, 16, 20,
                                                              22, 25, 27, 30, 32, 37, 39, 43};

/// Known witnesses: value and the word attaining it.
struct Witness {
  unsigned value;
  std::string_view word;
};
inline constexpr std::array<Witness, 4> kWitnesses{{
    {2, "1000"},
    {4, "101001000"},
    {8, "10100100010100001000"},
    {16, "1010010001000000010100010000000101000100101"},
}};

/// Percentages (two significant figures, as printed) of length-m words with
/// values 0..9, for m = 35..42.
struct DistributionReference {
  std::size_t length;
  std::array<std::string_view, 10> percent;
};
inline constexpr std::array<DistributionReference, 8> kDistribution{{
    {35, {"24", "26", "19", "15", "5.4", "5.7", "2.7", "2.5", ".51", ".25"}},
    {36, {"22", "27", "18", "15", "5.5", "5.7", "2.6", "2.8", ".54", ".27"}},
    {37, {"26", "22", "14", "19", "5.8", "5.5", "2.8", "2.8", ".55", ".31"}},
    {38, {"25", "23", "16", "17", "5.7", "5.7", "3.1", "2.7", ".56", ".35"}},
    {39, {"22", "26", "19", "14", "5.6", "5.9", "3.0", "3.0", ".59", ".37"}},
    {40, {"24", "24", "16", "18", "5.9", "5.7", "3.0", "3.2", ".61", ".40"}},
    {41, {"26", "22", "15", "19", "5.9", "5.8", "3.3", "3.1", ".61", ".44"}},
    {42, {"22", "24", "18", "15", "5.8", "6.0", "3.3", "3.2", ".63", ".47"}},
}};

/// Every sixth file stopped (files 4, 10, 16, ...): first length with value
/// exactly 2^alpha, alpha = 3..12.
inline constexpr std::size_t kSixthFilePeriod = 6;
inline constexpr std::size_t kSixthFileResidue = 4;
struct Milestone {
  unsigned alpha;
  std::size_t length;
};
inline constexpr std::array<Milestone, 10> kSixthFileMilestones{{
    {3, 51},
    {4, 111},
    {5, 202},
    {6, 497},
    {7, 1414},
    {8, 3545},
    {9, 8255},
    {10, 21208},
    {11, 61985},
    {12, 187193},
}};

/// Stopping files 0 and 5 modulo 14 gives values of period 504.
inline constexpr std::size_t kFourteenPeriod = 14;
inline constexpr std::array<std::size_t, 2> kFourteenResidues{0, 5};
inline constexpr std::size_t kFourteenValuePeriod = 504;

}  // namespace pawns::reference
