#include "hanfkit/richness.hpp"
