#include "farey/catalog.hpp"

namespace farey {

namespace {

RatPoint P(std::int64_t xn, std::int64_t xd, std::int64_t yn, std::int64_t yd) {
  return {rat(xn, xd), rat(yn, yd)};
}

KTuple family_tuple(std::int64_t first, std::int64_t last, int level) {
  KTuple t(static_cast<std::size_t>(level), 2);
  t.front() = first;
  t.back() = last;
  return t;
}

}  // namespace

std::vector<CellRow> cell_catalog(std::int64_t max_param, int max_level) {
  std::vector<CellRow> out;
  for (std::int64_t k = 2; k <= max_param; k += 2)
    out.push_back({"k even", {k}, {P(k - 1, k + 1, 2, k + 1), P(k, k + 2, 2, k + 2), P(1, 1, 2, k + 1), P(1, 1, 2, k)}});

  out.push_back({"1,3", {1, 3}, {P(1, 5, 4, 5), P(2, 7, 5, 7), P(1, 2, 1, 1), P(1, 3, 1, 1)}});
  for (std::int64_t l = 5; l <= max_param; l += 2)
    out.push_back({"1,l odd", {1, l},
                   {P(l - 3, l + 1, l - 1, l + 1), P(l - 2, l + 2, l, l + 2), P(l - 1, l + 1, 1, 1), P(l - 2, l, 1, 1)}});
  out.push_back({"3,1", {3, 1}, {P(1, 2, 1, 2), P(4, 7, 3, 7), P(1, 1, 3, 5), P(1, 1, 2, 3)}});
  for (std::int64_t k = 5; k <= max_param; k += 2)
    out.push_back({"k odd,1", {k, 1},
                   {P(k - 1, k + 1, 2, k + 1), P(k, k + 2, 2, k + 2), P(1, 1, 2, k + 1), P(1, 1, 2, k)}});

  out.push_back({"1,2,3", {1, 2, 3}, {P(1, 7, 6, 7), P(1, 5, 4, 5), P(2, 7, 1, 1), P(1, 5, 1, 1)}});
  out.push_back({"3,2,1", {3, 2, 1}, {P(4, 7, 3, 7), P(3, 5, 2, 5), P(1, 1, 4, 7), P(1, 1, 3, 5)}});
  out.push_back({"1,4,1", {1, 4, 1}, {P(2, 7, 5, 7), P(1, 3, 2, 3), P(4, 7, 1, 1), P(1, 2, 1, 1)}});
  for (std::int64_t l = 6; l <= max_param; l += 2)
    out.push_back({"1,l even,1", {1, l, 1},
                   {P(l - 3, l + 1, l - 1, l + 1), P(l - 2, l + 2, l, l + 2), P(l - 1, l + 1, 1, 1), P(l - 2, l, 1, 1)}});

  out.push_back({"1,2,2,3", {1, 2, 2, 3}, {P(1, 9, 8, 9), P(1, 7, 6, 7), P(1, 5, 1, 1), P(1, 7, 1, 1)}});
  out.push_back({"3,2,2,1", {3, 2, 2, 1}, {P(3, 5, 2, 5), P(5, 7, 3, 7), P(1, 1, 5, 9), P(1, 1, 4, 7)}});
  out.push_back({"1,2,4,1", {1, 2, 4, 1}, {P(1, 5, 4, 5), P(1, 3, 1, 1), P(2, 7, 1, 1)}});
  out.push_back({"1,4,2,1", {1, 4, 2, 1}, {P(1, 3, 2, 3), P(3, 5, 1, 1), P(4, 7, 1, 1)}});

  for (std::int64_t r = 4; r <= max_level; ++r) {
    out.push_back({"1,2..2,3", family_tuple(1, 3, static_cast<int>(r)),
                   {P(1, 2 * r + 1, 2 * r, 2 * r + 1), P(1, 2 * r - 1, 2 * r - 2, 2 * r - 1), P(1, 2 * r - 3, 1, 1),
                    P(1, 2 * r - 1, 1, 1)}});
    out.push_back({"3,2..2,1", family_tuple(3, 1, static_cast<int>(r)),
                   {P(2 * r - 5, 2 * r - 3, r - 2, 2 * r - 3), P(2 * r - 3, 2 * r - 1, r - 1, 2 * r - 1),
                    P(1, 1, r + 1, 2 * r + 1), P(1, 1, r, 2 * r - 1)}});
  }
  return out;
}

std::vector<WeightRow> weight_catalog(std::int64_t max_param, int max_level) {
  std::vector<WeightRow> out;
  auto add = [&](const std::string& fam, const KTuple& t, RatPoint v, Rational a) {
    out.push_back({fam, t, std::move(v), std::move(a), std::nullopt});
  };

  for (std::int64_t k = 2; k <= max_param; k += 2) {
    add("k even", {k}, P(k - 1, k + 1, 2, k + 1), rat(2 * k + 1, 2 * k * (k + 1)));
    add("k even", {k}, P(k, k + 2, 2, k + 2), rat(k + 2, k * (k + 1)));
    add("k even", {k}, P(1, 1, 2, k + 1), rat(2 * k + 1, 2 * k * (k + 1)));
    add("k even", {k}, P(1, 1, 2, k), rat(1, k));
  }

  add("1,3", {1, 3}, P(1, 5, 4, 5), rat(9, 20));
  add("1,3", {1, 3}, P(2, 7, 5, 7), rat(19, 30));
  add("1,3", {1, 3}, P(1, 2, 1, 1), rat(1, 3));
  add("1,3", {1, 3}, P(1, 3, 1, 1), rat(7, 12));
  for (std::int64_t l = 5; l <= max_param; l += 2) {
    add("1,l odd", {1, l}, P(l - 3, l + 1, l - 1, l + 1), rat(l, (l - 1) * (l + 1)));
    add("1,l odd", {1, l}, P(l - 2, l + 2, l, l + 2), rat(2 * l * l + 5 * l + 1, 2 * (l - 1) * l * (l + 1)));
    add("1,l odd", {1, l}, P(l - 1, l + 1, 1, 1), rat(1, l));
    add("1,l odd", {1, l}, P(l - 2, l, 1, 1), rat(2 * l + 1, 2 * l * (l - 1)));
  }
  add("3,1", {3, 1}, P(1, 2, 1, 2), rat(1, 3));
  add("3,1", {3, 1}, P(4, 7, 3, 7), rat(19, 30));
  add("3,1", {3, 1}, P(1, 1, 3, 5), rat(9, 20));
  add("3,1", {3, 1}, P(1, 1, 2, 3), rat(7, 12));
  for (std::int64_t k = 5; k <= max_param; k += 2) {
    add("k odd,1", {k, 1}, P(k - 1, k + 1, 2, k + 1), rat(1, k));
    add("k odd,1", {k, 1}, P(k, k + 2, 2, k + 2), rat(2 * k * k + 5 * k + 1, 2 * (k - 1) * k * (k + 1)));
    add("k odd,1", {k, 1}, P(1, 1, 2, k + 1), rat(k, (k - 1) * (k + 1)));
    add("k odd,1", {k, 1}, P(1, 1, 2, k), rat(2 * k + 1, 2 * k * (k - 1)));
    out.back().quoted_alpha = rat(2 * k + 1, 2 * k * (k + 1));
  }

  add("1,2,3", {1, 2, 3}, P(1, 7, 6, 7), rat(13, 28));
  add("1,2,3", {1, 2, 3}, P(1, 5, 4, 5), rat(13, 21));
  add("1,2,3", {1, 2, 3}, P(2, 7, 1, 1), rat(11, 30));
  add("1,2,3", {1, 2, 3}, P(1, 5, 1, 1), rat(11, 20));
  add("3,2,1", {3, 2, 1}, P(4, 7, 3, 7), rat(11, 30));
  add("3,2,1", {3, 2, 1}, P(3, 5, 2, 5), rat(13, 21));
  add("3,2,1", {3, 2, 1}, P(1, 1, 4, 7), rat(13, 28));
  add("3,2,1", {3, 2, 1}, P(1, 1, 3, 5), rat(11, 20));
  add("1,4,1", {1, 4, 1}, P(2, 7, 5, 7), rat(11, 30));
  add("1,4,1", {1, 4, 1}, P(1, 3, 2, 3), rat(3, 5));
  add("1,4,1", {1, 4, 1}, P(4, 7, 1, 1), rat(11, 30));
  add("1,4,1", {1, 4, 1}, P(1, 2, 1, 1), rat(2, 3));
  for (std::int64_t l = 6; l <= max_param; l += 2) {
    add("1,l even,1", {1, l, 1}, P(l - 3, l + 1, l - 1, l + 1), rat(2 * l - 1, 2 * (l - 1) * l));
    add("1,l even,1", {1, l, 1}, P(l - 2, l + 2, l, l + 2), rat(l + 2, (l - 2) * l));
    add("1,l even,1", {1, l, 1}, P(l - 1, l + 1, 1, 1), rat(2 * l - 1, 2 * (l - 1) * l));
    add("1,l even,1", {1, l, 1}, P(l - 2, l, 1, 1), rat(l, (l - 2) * (l - 1)));
  }

  add("1,2,2,3", {1, 2, 2, 3}, P(1, 9, 8, 9), rat(17, 36));
  add("1,2,2,3", {1, 2, 2, 3}, P(1, 7, 6, 7), rat(65, 72));
  add("1,2,2,3", {1, 2, 2, 3}, P(1, 5, 1, 1), rat(5, 56));
  add("1,2,2,3", {1, 2, 2, 3}, P(1, 7, 1, 1), rat(15, 28));
  add("1,2,4,1", {1, 2, 4, 1}, P(1, 5, 4, 5), rat(7, 24));
  add("1,2,4,1", {1, 2, 4, 1}, P(1, 3, 1, 1), rat(3, 40));
  add("1,2,4,1", {1, 2, 4, 1}, P(2, 7, 1, 1), rat(19, 30));
  add("1,4,2,1", {1, 4, 2, 1}, P(1, 3, 2, 3), rat(3, 40));
  add("1,4,2,1", {1, 4, 2, 1}, P(3, 5, 1, 1), rat(7, 24));
  add("1,4,2,1", {1, 4, 2, 1}, P(4, 7, 1, 1), rat(19, 30));
  add("3,2,2,1", {3, 2, 2, 1}, P(3, 5, 2, 5), rat(5, 56));
  add("3,2,2,1", {3, 2, 2, 1}, P(5, 7, 3, 7), rat(65, 72));
  add("3,2,2,1", {3, 2, 2, 1}, P(1, 1, 5, 9), rat(17, 36));
  add("3,2,2,1", {3, 2, 2, 1}, P(1, 1, 4, 7), rat(15, 28));

  for (std::int64_t r = 4; r <= max_level; ++r) {
    KTuple lo = family_tuple(1, 3, static_cast<int>(r)), hi = family_tuple(3, 1, static_cast<int>(r));
    add("1,2..2,3", lo, P(1, 2 * r + 1, 2 * r, 2 * r + 1), rat(4 * r + 1, 4 * (2 * r + 1)));
    add("1,2..2,3", lo, P(1, 2 * r - 1, 2 * r - 2, 2 * r - 1), rat(14 * r + 9, 8 * (2 * r + 1)));
    add("1,2..2,3", lo, P(1, 2 * r - 3, 1, 1), rat(2 * r - 3, 8 * (2 * r - 1)));
    add("1,2..2,3", lo, P(1, 2 * r - 1, 1, 1), rat(4 * r - 1, 4 * (2 * r - 1)));
    add("3,2..2,1", hi, P(2 * r - 5, 2 * r - 3, r - 2, 2 * r - 3), rat(2 * r - 3, 8 * (2 * r - 1)));
    add("3,2..2,1", hi, P(2 * r - 3, 2 * r - 1, r - 1, 2 * r - 1), rat(14 * r + 9, 8 * (2 * r + 1)));
    add("3,2..2,1", hi, P(1, 1, r + 1, 2 * r + 1), rat(4 * r + 1, 4 * (2 * r + 1)));
    add("3,2..2,1", hi, P(1, 1, r, 2 * r - 1), rat(4 * r - 1, 4 * (2 * r - 1)));
  }
  return out;
}

}  // namespace farey
