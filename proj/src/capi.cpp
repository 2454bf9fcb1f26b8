#include "hilbert.hpp"
