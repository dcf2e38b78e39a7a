#include <doctest.h>

#include "cutreg/vertex_set.hpp"

using namespace cutreg;

TEST_CASE("basic membership and counting") {
  VertexSet s(10);
  CHECK(s.empty());
  s.insert(3);
  s.insert(7);
  CHECK(s.count() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  s.erase(3);
  CHECK(s.count() == 1);
  CHECK_THROWS_AS(s.insert(10), std::out_of_range);
}

TEST_CASE("complement trims the tail across block boundaries") {
  for (int n : {1, 63, 64, 65, 96, 128, 130}) {
    VertexSet s(n);
    for (int v = 0; v < n; v += 3) s.insert(v);
    VertexSet c = s.complement();
    CHECK(s.count() + c.count() == n);
    CHECK(s.intersect(c).empty());
    CHECK(s.unite(c) == VertexSet::full(n));
    CHECK(c.complement() == s);
  }
}

TEST_CASE("from_mask round-trips through indices") {
  VertexSet s = VertexSet::from_mask(6, 0b101001ull);
  CHECK(s.indices() == std::vector<int>{0, 3, 5});
  CHECK(VertexSet::from_mask(64, ~0ull).count() == 64);
  CHECK(VertexSet::from_mask(3, 0xFFull).count() == 3);  // out-of-range bits drop
  CHECK_THROWS_AS(VertexSet::from_mask(65, 0), std::invalid_argument);
}

TEST_CASE("for_each visits in ascending order") {
  VertexSet s(130);
  s.insert(129);
  s.insert(0);
  s.insert(64);
  std::vector<int> seen;
  s.for_each([&](int v) { seen.push_back(v); });
  CHECK(seen == std::vector<int>{0, 64, 129});
}
