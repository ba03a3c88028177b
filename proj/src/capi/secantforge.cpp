#include "secantforge.h"

const char* sf_version(void) { return "0.1.0"; }
