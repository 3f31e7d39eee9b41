// Class-number tables of the four m-families as printed, cell for cell:
// (p, n, m, h(m), starred). Printed m values are kept even where they
// disagree with the family formula; reproduce_table() reports those rows.

#include "pellkit/families.hpp"

namespace pellkit {

namespace {

// Table 1, m = (2np)^2 - 1.
const std::vector<PrintedRow> kTable1 = {
    {5, 2, 399, 8, false},       {5, 3, 899, 6, false},
    {5, 4, 1599, 12, false},     {5, 6, 3599, 10, false},
    {5, 7, 4899, 16, false},     {13, 2, 2703, 12, false},
    {13, 3, 6083, 8, false},     {13, 4, 10815, 16, false},
    {13, 5, 16899, 40, false},   {17, 1, 1155, 8, false},
    {17, 2, 4623, 16, false},    {17, 3, 10403, 14, false},
    {17, 4, 18495, 12, false},   {29, 1, 3363, 8, false},
    {29, 4, 53823, 40, false},   {37, 3, 49283, 24, false},
    {37, 6, 197135, 72, false},  {41, 2, 26895, 32, false},
    {41, 4, 26895, 32, false},   {41, 5, 168099, 72, false},
    {53, 1, 11235, 24, false},   {53, 2, 44943, 20, false},
    {53, 3, 101123, 36, false},  {59, 2, 55695, 32, false},
};

// Table 2, m = (2np)^2 + 3.
const std::vector<PrintedRow> kTable2 = {
    {3, 3, 327, 2, false},       {3, 6, 1299, 8, false},
    {3, 9, 2919, 8, false},      {5, 3, 903, 4, false},
    {5, 6, 3603, 4, false},      {5, 9, 8103, 8, false},
    {7, 3, 1767, 4, false},      {7, 6, 7059, 8, false},
    {7, 9, 15879, 12, false},    {11, 3, 4359, 10, false},
    {11, 6, 174427, 16, false},  {11, 9, 39207, 16, false},
    {13, 3, 6087, 10, false},    {13, 6, 24339, 16, false},
    {13, 9, 54759, 30, false},   {17, 3, 10407, 6, false},
    {19, 3, 1299, 16, false},    {19, 6, 51987, 16, false},
    {19, 9, 116967, 24, false},  {29, 3, 30279, 18, false},
    {29, 6, 121107, 24, false},  {29, 9, 272487, 24, false},
    {31, 3, 34599, 20, false},   {31, 6, 138387, 24, false},
    {31, 9, 311367, 36, false},  {37, 3, 49287, 20, false},
    {37, 6, 197139, 32, false},  {37, 9, 443559, 78, false},
    {41, 3, 60519, 38, false},   {41, 6, 242067, 36, false},
};

// Table 3, m = ((2n+1)p)^2 + 2. The (17, 2) row carries the star.
const std::vector<PrintedRow> kTable3 = {
    {7, 1, 443, 3, false},       {7, 2, 1227, 4, false},
    {17, 1, 2603, 4, false},     {17, 2, 7227, 2, true},
    {17, 3, 14163, 10, false},   {17, 4, 23411, 10, false},
    {17, 5, 34971, 18, false},   {23, 1, 4763, 4, false},
    {23, 2, 13227, 10, false},   {23, 3, 25923, 16, false},
    {23, 4, 42851, 20, false},   {23, 5, 64011, 24, false},
    {31, 1, 9218, 6, false},     {31, 2, 24027, 10, false},
    {31, 3, 47091, 32, false},   {31, 4, 77843, 12, false},
    {31, 5, 116283, 16, false},  {41, 1, 15131, 15, false},
    {41, 2, 42027, 10, false},   {41, 3, 82371, 44, false},
    {41, 4, 136163, 21, false},  {41, 5, 203403, 24, false},
    {47, 1, 19883, 6, false},    {47, 2, 55227, 20, false},
    {47, 4, 178931, 33, false},  {71, 1, 45371, 22, false},
    {71, 3, 247011, 44, false},  {71, 4, 408323, 28, false},
    {71, 5, 609963, 58, false},  {73, 1, 47963, 9, false},
    {73, 3, 261123, 38, false},  {73, 4, 431651, 52, false},
};

// Table 4, m = ((2n+1)p)^2 - 2.
const std::vector<PrintedRow> kTable4 = {
    {11, 1, 1087, 7, false},     {11, 2, 3023, 3, false},
    {11, 3, 5927, 5, false},     {11, 4, 9799, 18, false},
    {11, 5, 14639, 17, false},   {17, 1, 2599, 14, false},
    {17, 2, 7223, 4, false},     {17, 3, 14159, 9, false},
    {17, 4, 23407, 16, false},   {17, 5, 34967, 16, false},
    {19, 1, 3247, 8, false},     {19, 2, 9023, 8, false},
    {19, 3, 17687, 6, false},    {19, 4, 29239, 34, false},
    {41, 1, 15127, 10, false},   {41, 2, 42023, 15, false},
    {41, 3, 82367, 14, false},   {41, 4, 136159, 78, false},
    {43, 1, 16639, 24, false},   {43, 2, 46223, 16, false},
    {43, 3, 90599, 19, false},   {43, 4, 149767, 39, false},
    {43, 5, 223727, 24, false},  {59, 1, 31327, 27, false},
    {59, 2, 87023, 12, false},   {59, 3, 170567, 16, false},
    {59, 4, 281959, 55, false},  {59, 5, 42119, 66, false},
    {73, 1, 47959, 42, false},   {73, 2, 133223, 14, false},
    {73, 3, 261119, 38, false},  {73, 4, 431647, 46, false},
};

}  // namespace

const std::vector<PrintedTable>& printed_tables() {
  static const std::vector<PrintedTable> tables = {
      {1, Family::F1, kTable1},
      {2, Family::F2, kTable2},
      {3, Family::F3, kTable3},
      {4, Family::F4, kTable4},
  };
  return tables;
}

const PrintedTable& printed_table(int id) {
  if (id < 1 || id > 4) throw Error(ErrorCode::invalid_argument, "printed_table: table id must be 1..4");
  return printed_tables()[static_cast<std::size_t>(id - 1)];
}

}  // namespace pellkit
