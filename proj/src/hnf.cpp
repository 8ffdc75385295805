#include "hanfkit/hnf.hpp"
