import os
import sys

# Make the mastgadget package importable from the repository root
sys.path.insert(0, os.path.dirname(__file__))
