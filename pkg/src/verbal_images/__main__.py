"""
Main entry point for the verbal_images package.
Allows running the tool with 'python -m verbal_images'.
"""

from .app import main

if __name__ == "__main__":
    main()
