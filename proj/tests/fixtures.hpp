// Transcribed reference data: worked check matrices and published
// generator tables used as byte-exact oracles by the unit and acceptance
// suites. Row strings are B1 and B2 halves concatenated.
#pragma once

#include <string>
#include <vector>

namespace fixtures {

// 5x5 circulant shift (period 5).
inline const std::vector<std::string> kShift5 = {
    "00001", "10000", "01000", "00100", "00010",
};

// C_5, B1 = A_1, B2 = A_2 (5 x 10).
inline const std::vector<std::string> kB_C5 = {
    "0100100110", "1010000011", "0101010001", "0010111000", "1001001100",
};

// C_6, B1 = A_2 + A_3, B2 = A_0 + A_1 + A_2 (6 x 12).
inline const std::vector<std::string> kB_C6 = {
    "001110111011", "000111111101", "100011111110",
    "110001011111", "111000101111", "011100110111",
};

// C_7, B1 = A_1, B2 = A_2 + A_3 (7 x 14).
inline const std::vector<std::string> kB_C7 = {
    "01000010011110", "10100000001111", "01010001000111", "00101001100011",
    "00010101110001", "00001011111000", "10000100111100",
};

// C_11, B1 = A_1 + A_4 + A_5, B2 = A_2 + A_5 (11 x 22).
inline const std::vector<std::string> kB_C11 = {
    "0100111100100100110010", "1010011110000010011001",
    "0101001111010001001100", "0010100111101000100110",
    "1001010011100100010011", "1100101001110010001001",
    "1110010100111001000100", "1111001010001100100010",
    "0111100101000110010001", "0011110010110011001000",
    "1001111001001001100100",
};

// C_13, B1 = A_1 + A_3 + A_4 + A_5, B2 = A_2 + A_3 + A_5 (13 x 26).
inline const std::vector<std::string> kB_C13 = {
    "01011100111010011010010110", "10101110011100001101001011",
    "01010111001111000110100101", "10101011100111100011010010",
    "11010101110010110001101001", "11101010111001011000110100",
    "01110101011100101100011010", "00111010101110010110001101",
    "10011101010111001011000110", "11001110101010100101100011",
    "11100111010101010010110001", "01110011101011101001011000",
    "10111001110100110100101100",
};

// U_12, B1 = A_2, B2 = A_3 + A_5 (12 x 24).
inline const std::vector<std::string> kB_U12 = {
    "000010001000010001100110", "000001000100001000110011",
    "000000100010000110011001", "000000010001100011001100",
    "100000001000011001000110", "010000000100001100100011",
    "001000000010100100011001", "000100000001110010001100",
    "100010000000011001100100", "010001000000001100110010",
    "001000100000100110010001", "000100010000110011001000",
};

// Eq. system for the [[5,1,3]] code: rows act on (a | b) = (x1..x5, y1..y5).
inline const std::vector<std::string> kSyndrome_C5 = {
    "0011001001", "0001110100", "1000101010", "1100000101",
};

// Eq. system for the U_12 [[12,4,3]] code (8 x 24), columns (x | y).
inline const std::vector<std::string> kSyndrome_U12 = {
    "010001100110000010001000", "001000110011000001000100",
    "000110011001000000100010", "100011001100000000010001",
    "011001000110100000001000", "001100100011010000000100",
    "100100011001001000000010", "110010001100000100000001",
};

// Published stabilizer generators.
inline const std::vector<std::string> kTable1 = {
    "IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX",
};

inline const std::vector<std::string> kTable2 = {
    "ZZYXYZ", "ZZZYXY", "YZZZYX", "XYZZZY", "YXYZZZ",
};

inline const std::vector<std::string> kTable3 = {
    "IXZZZZX", "XIXZZZZ", "ZXIXZZZ", "ZZXIXZZ", "ZZZXIXZ", "ZZZZXIX",
};

// Printed rows g1..g6, g8..g10 (the paper omits g7); index 6 of the
// artifact's ten generators has no printed counterpart.
inline const std::vector<std::string> kTable6Printed = {
    "IXZIXYYXIZX", "XIXZIXYYXIZ", "ZXIXZIXYYXI",
    "IZXIXZIXYYX", "XIZXIXZIXYY", "YXIZXIXZIXY",
    "XYYXIZXIXZI", "IXYYXIZXIXZ", "ZIXYYXIZXIX",
};
inline const std::vector<std::size_t> kTable6PrintedIndices = {0, 1, 2, 3, 4,
                                                              5, 7, 8, 9};

inline const std::vector<std::string> kTable7 = {
    "IXZYXYIIYXYZX", "XIXZYXYIIYXYZ", "ZXIXZYXYIIYXY", "YZXIXZYXYIIYX",
    "XYZXIXZYXYIIY", "YXYZXIXZYXYII", "IYXYZXIXZYXYI", "IIYXYZXIXZYXY",
    "YIIYXYZXIXZYX", "XYIIYXYZXIXZY", "YXYIIYXYZXIXZ", "ZYXYIIYXYZXIX",
};

inline const std::vector<std::string> kTable8 = {
    "IIIYXZYZZXXXXZZYZXYII", "IIIIYXZYZZXXXXZZYZXYI",
    "IIIIIYXZYZZXXXXZZYZXY", "YIIIIIYXZYZZXXXXZZYZX",
    "XYIIIIIYXZYZZXXXXZZYZ", "ZXYIIIIIYXZYZZXXXXZZY",
    "YZXYIIIIIYXZYZZXXXXZZ", "ZYZXYIIIIIYXZYZZXXXXZ",
    "ZZYZXYIIIIIYXZYZZXXXX", "XZZYZXYIIIIIYXZYZZXXX",
    "XXZZYZXYIIIIIYXZYZZXX", "XXXZZYZXYIIIIIYXZYZZX",
    "XXXXZZYZXYIIIIIYXZYZZ", "ZXXXXZZYZXYIIIIIYXZYZ",
    "ZZXXXXZZYZXYIIIIIYXZY", "YZZXXXXZZYZXYIIIIIYXZ",
};

inline const std::vector<std::string> kTable9 = {
    "IZIIXZZIXZZI", "IIZIIXZZIXZZ", "IIIZZIXZZIXZ", "ZIIIZZIXZZIX",
    "XZZIIZIIXZZI", "IXZZIIZIIXZZ", "ZIXZIIIZZIXZ", "ZZIXZIIIZZIX",
};

}  // namespace fixtures
