// Single translation unit for the Catch2 amalgamated implementation
// (provides main() for the unit-test binary).
#include <catch2/catch_amalgamated.cpp>
