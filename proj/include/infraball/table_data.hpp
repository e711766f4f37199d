#pragma once

#include <vector>

#include "infraball/basis.hpp"

namespace infraball {

// Golden rows of the published low-degree tables (types 1 and 2, degrees
// 2-4), transcribed verbatim including the stray degree-0 constants that
// appear inside some type-2 entries.
struct GoldenTerm {
    std::array<std::uint32_t, 3> exp;
    int component;
    const char* coeff;
};

struct GoldenTableRow {
    BasisId id;  // family Y or Zu as labeled in the source table
    std::vector<GoldenTerm> terms;
};

inline QPolynomial golden_row_polynomial(const GoldenTableRow& row) {
    std::array<ScalarPoly, 4> comps;
    for (const auto& t : row.terms)
        comps[static_cast<std::size_t>(t.component)].add_term(
            Monomial{t.exp[0], t.exp[1], t.exp[2]}, rational_from_string(t.coeff));
    return {comps[0], comps[1], comps[2], comps[3]};
}

inline const std::vector<GoldenTableRow>& golden_table_rows() {
    static const std::vector<GoldenTableRow> rows = {
        {{2, Family::Y, Parity::plus, 0},
         {{{0,0,2}, 0, "6"}, {{0,2,0}, 0, "6"}, {{1,0,1}, 2, "-2"}, {{1,1,0}, 1, "-2"}, {{2,0,0}, 0, "8"}}},
        {{2, Family::Y, Parity::plus, 1},
         {{{0,0,2}, 1, "6"}, {{0,1,1}, 2, "6"}, {{0,2,0}, 1, "12"}, {{2,0,0}, 1, "12"}}},
        {{2, Family::Y, Parity::minus, 1},
         {{{0,0,2}, 2, "12"}, {{0,1,1}, 1, "6"}, {{0,2,0}, 2, "6"}, {{2,0,0}, 2, "12"}}},
        {{2, Family::Zu, Parity::plus, 0},
         {{{1,0,1}, 1, "-3"}, {{1,1,0}, 2, "3"}}},
        {{2, Family::Zu, Parity::plus, 1},
         {{{0,0,0}, 2, "2/15"}, {{0,0,2}, 1, "-329/220"}, {{0,1,1}, 2, "287/220"}, {{0,2,0}, 1, "-21/110"}, {{1,1,0}, 0, "7/5"}, {{2,0,0}, 1, "133/110"}}},
        {{2, Family::Zu, Parity::minus, 1},
         {{{0,0,0}, 2, "2/15"}, {{0,0,2}, 2, "-21/110"}, {{0,1,1}, 1, "287/220"}, {{0,2,0}, 2, "-329/220"}, {{1,0,1}, 0, "7/5"}, {{2,0,0}, 2, "133/110"}}},
        {{2, Family::Zu, Parity::plus, 2},
         {{{0,0,0}, 2, "1/15"}, {{0,0,2}, 0, "14"}, {{0,2,0}, 0, "-14"}, {{1,0,1}, 2, "14"}, {{1,1,0}, 1, "-14"}}},
        {{2, Family::Zu, Parity::minus, 2},
         {{{0,0,0}, 2, "1/15"}, {{0,1,1}, 0, "-28"}, {{1,0,1}, 1, "-14"}, {{1,1,0}, 2, "-14"}}},
        {{3, Family::Y, Parity::plus, 0},
         {{{0,0,3}, 2, "9"}, {{0,1,2}, 1, "9"}, {{0,2,1}, 2, "9"}, {{0,3,0}, 1, "9"}, {{1,0,2}, 0, "15"}, {{1,2,0}, 0, "15"}, {{2,0,1}, 2, "6"}, {{2,1,0}, 1, "6"}, {{3,0,0}, 0, "18"}}},
        {{3, Family::Y, Parity::plus, 1},
         {{{0,1,2}, 0, "-33"}, {{0,3,0}, 0, "-33"}, {{1,0,2}, 1, "21"}, {{1,1,1}, 2, "18"}, {{1,2,0}, 1, "39"}, {{2,1,0}, 0, "-36"}, {{3,0,0}, 1, "36"}}},
        {{3, Family::Y, Parity::minus, 1},
         {{{0,0,3}, 0, "-33"}, {{0,2,1}, 0, "-33"}, {{1,0,2}, 2, "39"}, {{1,1,1}, 1, "18"}, {{1,2,0}, 2, "21"}, {{2,0,1}, 0, "-36"}, {{3,0,0}, 2, "36"}}},
        {{3, Family::Y, Parity::plus, 2},
         {{{0,0,3}, 2, "90"}, {{0,1,2}, 1, "-30"}, {{0,2,1}, 2, "30"}, {{0,3,0}, 1, "-90"}, {{1,0,2}, 0, "30"}, {{1,2,0}, 0, "-30"}, {{2,0,1}, 2, "120"}, {{2,1,0}, 1, "-120"}}},
        {{3, Family::Y, Parity::minus, 2},
         {{{0,0,3}, 1, "-60"}, {{0,1,2}, 2, "-120"}, {{0,2,1}, 1, "-120"}, {{0,3,0}, 2, "-60"}, {{1,1,1}, 0, "-60"}, {{2,0,1}, 1, "-120"}, {{2,1,0}, 2, "-120"}}},
        {{3, Family::Zu, Parity::plus, 0},
         {{{0,0,3}, 1, "3/2"}, {{0,1,2}, 2, "-3/2"}, {{0,2,1}, 1, "3/2"}, {{0,3,0}, 2, "-3/2"}, {{2,0,1}, 1, "-6"}, {{2,1,0}, 2, "6"}}},
        {{3, Family::Zu, Parity::plus, 1},
         {{{0,0,0}, 2, "3/28"}, {{0,1,2}, 0, "-2997/7756"}, {{0,3,0}, 0, "-2997/7756"}, {{1,0,2}, 1, "-41607/7756"}, {{1,1,1}, 2, "18495/3878"}, {{1,2,0}, 1, "-4617/7756"}, {{2,1,0}, 0, "3942/1939"}, {{3,0,0}, 1, "3537/1939"}}},
        {{3, Family::Zu, Parity::minus, 1},
         {{{0,0,0}, 2, "3/28"}, {{0,0,3}, 0, "-2997/7756"}, {{0,2,1}, 0, "-2997/7756"}, {{1,0,2}, 2, "-4617/7756"}, {{1,1,1}, 1, "18495/3878"}, {{1,2,0}, 2, "-41607/7756"}, {{2,0,1}, 0, "3942/1939"}, {{3,0,0}, 2, "3537/1939"}}},
        {{3, Family::Zu, Parity::plus, 2},
         {{{0,0,0}, 2, "1/14"}, {{0,0,3}, 2, "-1620/1001"}, {{0,1,2}, 1, "2835/143"}, {{0,2,1}, 2, "-2835/143"}, {{0,3,0}, 1, "1620/1001"}, {{1,0,2}, 0, "18765/1001"}, {{1,2,0}, 0, "-18765/1001"}, {{2,0,1}, 2, "17145/1001"}, {{2,1,0}, 1, "-17145/1001"}}},
        {{3, Family::Zu, Parity::minus, 2},
         {{{0,0,0}, 2, "1/14"}, {{0,0,3}, 1, "21465/2002"}, {{0,1,2}, 2, "-14985/2002"}, {{0,2,1}, 1, "-14985/2002"}, {{0,3,0}, 2, "21465/2002"}, {{1,1,1}, 0, "-37530/1001"}, {{2,0,1}, 1, "-17145/1001"}, {{2,1,0}, 2, "-17145/1001"}}},
        {{3, Family::Zu, Parity::plus, 3},
         {{{0,0,0}, 2, "1/28"}, {{0,1,2}, 0, "-1215/4"}, {{0,3,0}, 0, "405/4"}, {{1,0,2}, 1, "-405/4"}, {{1,1,1}, 2, "-405/2"}, {{1,2,0}, 1, "405/4"}}},
        {{3, Family::Zu, Parity::minus, 3},
         {{{0,0,0}, 2, "1/28"}, {{0,0,3}, 0, "-405/4"}, {{0,2,1}, 0, "1215/4"}, {{1,0,2}, 2, "-405/4"}, {{1,1,1}, 1, "405/2"}, {{1,2,0}, 2, "405/4"}}},
        {{4, Family::Y, Parity::plus, 0},
         {{{0,0,4}, 0, "-15"}, {{0,2,2}, 0, "-30"}, {{0,4,0}, 0, "-15"}, {{1,0,3}, 2, "33"}, {{1,1,2}, 1, "33"}, {{1,2,1}, 2, "33"}, {{1,3,0}, 1, "33"}, {{2,0,2}, 0, "12"}, {{2,2,0}, 0, "12"}, {{3,0,1}, 2, "28"}, {{3,1,0}, 1, "28"}, {{4,0,0}, 0, "32"}}},
        {{4, Family::Y, Parity::plus, 1},
         {{{0,0,4}, 1, "-15"}, {{0,1,3}, 2, "-45"}, {{0,2,2}, 1, "-75"}, {{0,3,1}, 2, "-45"}, {{0,4,0}, 1, "-60"}, {{1,1,2}, 0, "-150"}, {{1,3,0}, 0, "-150"}, {{2,0,2}, 1, "30"}, {{2,2,0}, 1, "30"}, {{3,1,0}, 0, "-160"}, {{4,0,0}, 1, "80"}}},
        {{4, Family::Y, Parity::minus, 1},
         {{{0,0,4}, 2, "-60"}, {{0,1,3}, 1, "-45"}, {{0,2,2}, 2, "-75"}, {{0,3,1}, 1, "-45"}, {{0,4,0}, 2, "-15"}, {{1,0,3}, 0, "-150"}, {{1,2,1}, 0, "-150"}, {{2,0,2}, 2, "30"}, {{2,2,0}, 2, "30"}, {{3,0,1}, 0, "-160"}, {{4,0,0}, 2, "80"}}},
        {{4, Family::Y, Parity::plus, 2},
         {{{0,0,4}, 0, "-240"}, {{0,4,0}, 0, "240"}, {{1,0,3}, 2, "480"}, {{1,1,2}, 1, "-180"}, {{1,2,1}, 2, "180"}, {{1,3,0}, 1, "-480"}, {{2,0,2}, 0, "-180"}, {{2,2,0}, 0, "180"}, {{3,0,1}, 2, "540"}, {{3,1,0}, 1, "-540"}}},
        {{4, Family::Y, Parity::minus, 2},
         {{{0,1,3}, 0, "480"}, {{0,3,1}, 0, "480"}, {{1,0,3}, 1, "-330"}, {{1,1,2}, 2, "-630"}, {{1,2,1}, 1, "-630"}, {{1,3,0}, 2, "-330"}, {{2,1,1}, 0, "360"}, {{3,0,1}, 1, "-540"}, {{3,1,0}, 2, "-540"}}},
        {{4, Family::Y, Parity::plus, 3},
         {{{0,0,4}, 1, "-630"}, {{0,1,3}, 2, "-1890"}, {{0,2,2}, 1, "-630"}, {{0,3,1}, 2, "-1050"}, {{0,4,0}, 1, "840"}, {{1,1,2}, 0, "-1260"}, {{1,3,0}, 0, "420"}, {{2,0,2}, 1, "-1260"}, {{2,1,1}, 2, "-2520"}, {{2,2,0}, 1, "1260"}}},
        {{4, Family::Y, Parity::minus, 3},
         {{{0,0,4}, 2, "-840"}, {{0,1,3}, 1, "1050"}, {{0,2,2}, 2, "630"}, {{0,3,1}, 1, "1890"}, {{0,4,0}, 2, "630"}, {{1,0,3}, 0, "-420"}, {{1,2,1}, 0, "1260"}, {{2,0,2}, 2, "-1260"}, {{2,1,1}, 1, "2520"}, {{2,2,0}, 2, "1260"}}},
        {{4, Family::Zu, Parity::plus, 0},
         {{{1,0,3}, 1, "15/2"}, {{1,1,2}, 2, "-15/2"}, {{1,2,1}, 1, "15/2"}, {{1,3,0}, 2, "-15/2"}, {{3,0,1}, 1, "-10"}, {{3,1,0}, 2, "10"}}},
        {{4, Family::Zu, Parity::plus, 1},
         {{{0,0,0}, 2, "4/45"}, {{0,0,4}, 1, "10417/5640"}, {{0,1,3}, 2, "-10109/5640"}, {{0,2,2}, 1, "715/376"}, {{0,3,1}, 2, "-10109/5640"}, {{0,4,0}, 1, "77/1410"}, {{1,1,2}, 0, "-319/188"}, {{1,3,0}, 0, "-319/188"}, {{2,0,2}, 1, "-12089/940"}, {{2,1,1}, 2, "11"}, {{2,2,0}, 1, "-1749/940"}, {{3,1,0}, 0, "1826/705"}, {{4,0,0}, 1, "1672/705"}}},
        {{4, Family::Zu, Parity::minus, 1},
         {{{0,0,0}, 2, "4/45"}, {{0,0,4}, 2, "77/1410"}, {{0,1,3}, 1, "-10109/5640"}, {{0,2,2}, 2, "715/376"}, {{0,3,1}, 1, "-10109/5640"}, {{0,4,0}, 2, "10417/5640"}, {{1,0,3}, 0, "-319/188"}, {{1,2,1}, 0, "-319/188"}, {{2,0,2}, 2, "-1749/940"}, {{2,1,1}, 1, "11"}, {{2,2,0}, 2, "-12089/940"}, {{3,0,1}, 0, "1826/705"}, {{4,0,0}, 2, "1672/705"}}},
        {{4, Family::Zu, Parity::plus, 2},
         {{{0,0,0}, 2, "1/15"}, {{0,0,4}, 0, "-5918/947"}, {{0,4,0}, 0, "5918/947"}, {{1,0,3}, 2, "-8998/947"}, {{1,1,2}, 1, "104940/947"}, {{1,2,1}, 2, "-104940/947"}, {{1,3,0}, 1, "8998/947"}, {{2,0,2}, 0, "42438/947"}, {{2,2,0}, 0, "-42438/947"}, {{3,0,1}, 2, "39358/947"}, {{3,1,0}, 1, "-39358/947"}}},
        {{4, Family::Zu, Parity::minus, 2},
         {{{0,0,0}, 2, "1/15"}, {{0,1,3}, 0, "11836/947"}, {{0,3,1}, 0, "11836/947"}, {{1,0,3}, 1, "56969/947"}, {{1,1,2}, 2, "-38973/947"}, {{1,2,1}, 1, "-38973/947"}, {{1,3,0}, 2, "56969/947"}, {{2,1,1}, 0, "-84876/947"}, {{3,0,1}, 1, "-39358/947"}, {{3,1,0}, 2, "-39358/947"}}},
        {{4, Family::Zu, Parity::plus, 3},
         {{{0,0,0}, 2, "2/45"}, {{0,0,4}, 1, "3157/36"}, {{0,1,3}, 2, "-539/12"}, {{0,2,2}, 1, "-7931/36"}, {{0,3,1}, 2, "26873/108"}, {{0,4,0}, 1, "-385/27"}, {{1,1,2}, 0, "-12089/18"}, {{1,3,0}, 0, "12089/54"}, {{2,0,2}, 1, "-3773/18"}, {{2,1,1}, 2, "-3773/9"}, {{2,2,0}, 1, "3773/18"}}},
        {{4, Family::Zu, Parity::minus, 3},
         {{{0,0,0}, 2, "2/45"}, {{0,0,4}, 2, "385/27"}, {{0,1,3}, 1, "-26873/108"}, {{0,2,2}, 2, "7931/36"}, {{0,3,1}, 1, "539/12"}, {{0,4,0}, 2, "-3157/36"}, {{1,0,3}, 0, "-12089/54"}, {{1,2,1}, 0, "12089/18"}, {{2,0,2}, 2, "-3773/18"}, {{2,1,1}, 1, "3773/9"}, {{2,2,0}, 2, "3773/18"}}},
        {{4, Family::Zu, Parity::plus, 4},
         {{{0,0,0}, 2, "1/45"}, {{0,0,4}, 0, "-924"}, {{0,2,2}, 0, "5544"}, {{0,4,0}, 0, "-924"}, {{1,0,3}, 2, "-924"}, {{1,1,2}, 1, "2772"}, {{1,2,1}, 2, "2772"}, {{1,3,0}, 1, "-924"}}},
        {{4, Family::Zu, Parity::minus, 4},
         {{{0,0,0}, 2, "1/45"}, {{0,1,3}, 0, "3696"}, {{0,3,1}, 0, "-3696"}, {{1,0,3}, 1, "924"}, {{1,1,2}, 2, "2772"}, {{1,2,1}, 1, "-2772"}, {{1,3,0}, 2, "-924"}}},
    };
    return rows;
}

}  // namespace infraball
