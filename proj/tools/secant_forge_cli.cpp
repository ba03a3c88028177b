#include <cstdio>
#include "secantforge.h"

int main() {
  std::printf("secant-forge %s (bring-up stub)\n", sf_version());
  return 2;
}
