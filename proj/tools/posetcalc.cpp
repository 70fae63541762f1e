#include "posetcalc/lattice.hpp"
int main() { return 0; }
