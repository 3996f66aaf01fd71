#!/usr/bin/env python3
"""
Main runner script for mastgadget
"""

import sys
from pathlib import Path


def check_dependencies():
    """Check if all required dependencies are installed"""
    required_packages = [
        'dotenv',
        'pydantic',
        'psutil',
        'networkx'
    ]

    missing = []
    for package in required_packages:
        try:
            __import__(package)
        except ImportError:
            missing.append(package)

    if missing:
        print(f"Missing packages: {', '.join(missing)}", file=sys.stderr)
        print("Install them with: pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


def main():
    if not check_dependencies():
        return 2

    sys.path.insert(0, str(Path(__file__).parent))
    from mastgadget.app import main as app_main
    return app_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
