#include "hanfkit/dyndb.hpp"
