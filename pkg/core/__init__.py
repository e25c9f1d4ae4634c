"""wildcount core: algebra, ramification and the command-line interface"""
