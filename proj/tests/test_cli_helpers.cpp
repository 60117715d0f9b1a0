#include <elliptikit/parse.hpp>

#include "common.hpp"

using namespace ektest;
namespace ps = ek::parse;

namespace {

template <class F>
bool parse_error(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::ParseError;
  }
  return false;
}

}  // namespace

TEST(Parse, RealExpressions) {
  EXPECT_EQ(ps::real_expr("0.25"), 0.25L);
  EXPECT_EQ(ps::real_expr(" -3e-2 "), -3e-2L);
  EXPECT_NEAR(double(ps::real_expr("pi")), 3.14159265358979323846, 1e-18);
  EXPECT_NEAR(double(ps::real_expr("2*pi/3")), 2 * 3.14159265358979323846 / 3, 1e-15);
  EXPECT_NEAR(double(ps::real_expr("pi/2")), 3.14159265358979323846 / 2, 1e-15);
  for (auto* bad : {"", "abc", "1+2", "1/0", "2**3", "pi pi"}) EXPECT_TRUE(parse_error([&] { ps::real_expr(bad); })) << bad;
}

TEST(Parse, Triples) {
  auto t = ps::triple("1, 0.8,0.6");
  EXPECT_EQ(t[0], 1.0L);
  EXPECT_EQ(t[1], 0.8L);
  EXPECT_EQ(t[2], 0.6L);
  EXPECT_TRUE(parse_error([] { ps::triple("1,2"); }));
  EXPECT_TRUE(parse_error([] { ps::triple("1,2,3,4"); }));
}

TEST(Parse, Vertices) {
  auto a = ps::vertices({"1,0,0", "0,1,0", "0,0,1"});
  auto b = ps::vertices({"1,0,0;0,1,0;0,0,1"});
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(a[k], b[k]);
    EXPECT_EQ(a[k][k], 1.0L);
  }
  EXPECT_TRUE(parse_error([] { ps::vertices({"1,0,0", "0,1,0"}); }));
  EXPECT_TRUE(parse_error([] { ps::vertices({"1,0,0;0,1,0"}); }));
}

TEST(Parse, SplitAndTrim) {
  EXPECT_EQ(ps::trim("  a b \t"), "a b");
  auto s = ps::split("a,,b", ',');
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1], "");
}
