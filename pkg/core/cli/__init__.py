"""wildcount command-line interface"""
