#!/usr/bin/env python3

from pyquadri.main import main_func

main_func()
