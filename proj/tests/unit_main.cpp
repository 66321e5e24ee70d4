/* doctest runner for the unit suites; suite selection via -ts=<name>. */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
