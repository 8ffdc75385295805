#include "hanfkit/modelcheck.hpp"
