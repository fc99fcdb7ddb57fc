#pragma once

#include <cmath>
#include <cstdio>
#include <string>

// Minimal check harness shared by the test binaries: failures are counted
// and reported, the process exits non-zero if any check failed.

namespace testing {

inline int failures = 0;

// Line-buffer stdout so progress lines survive aborts in order.
inline void init() { std::setvbuf(stdout, nullptr, _IOLBF, 0); }

inline void check(bool ok, const char* what, const char* file, int line) {
  if (!ok) {
    std::printf("  FAIL %s:%d  %s\n", file, line, what);
    ++failures;
  }
}

inline void check_near(double got, double want, double tol, const char* what,
                       const char* file, int line) {
  if (!(std::fabs(got - want) <= tol)) {
    std::printf("  FAIL %s:%d  %s  got=%.17g want=%.17g diff=%.3g\n", file,
                line, what, got, want, got - want);
    ++failures;
  }
}

inline int summary(const char* suite) {
  if (failures == 0) {
    std::printf("%s: all tests passed\n", suite);
    return 0;
  }
  std::printf("%s: %d FAILURES\n", suite, failures);
  return 1;
}

}  // namespace testing

#define T_CHECK(cond) ::testing::check((cond), #cond, __FILE__, __LINE__)
#define T_NEAR(got, want, tol) \
  ::testing::check_near((got), (want), (tol), #got, __FILE__, __LINE__)
#define T_THROWS(expr, extype)                                          \
  do {                                                                  \
    bool caught_ = false;                                               \
    try {                                                               \
      (void)(expr);                                                     \
    } catch (const extype&) {                                           \
      caught_ = true;                                                   \
    }                                                                   \
    ::testing::check(caught_, "expected " #extype ": " #expr, __FILE__, \
                     __LINE__);                                         \
  } while (0)
