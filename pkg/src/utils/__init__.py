"""
Utilities module
"""
