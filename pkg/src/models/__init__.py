"""
Data models module
"""