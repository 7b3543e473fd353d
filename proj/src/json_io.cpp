#include "nilskt/scalar.hpp"
