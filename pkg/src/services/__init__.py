"""
Services module
"""